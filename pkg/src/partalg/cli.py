"""Command-line front end: ``partalg <subcommand> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from . import algebra as alg
from .characters import (
    character_table_csv,
    half_multiplicity,
    multiplicity,
    partition_algebra_character,
)
from .combinatorics import (
    IntegerPartition,
    bell,
    bell_table,
    half_label,
    integer_partitions,
    restricted_bell,
    table_to_csv,
)
from .errors import BudgetExceeded, PartalgError, ParseError
from .linalg import fraction_str
from .setpart import SetPartition
from .tableaux import (
    SetPartitionTableau,
    TraceStep,
    VacillatingTableau,
    bijection_A,
    bijection_B,
    build_bratteli,
    step_trace,
)
from .tensorrep import (
    DEFAULT_BUDGET,
    image_dimension,
    kernel_basis,
    orbit_count,
    represent,
)
from .verify import EXTRA_SUITES, SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_two_k(text: str) -> int:
    """Read k as ``"2"``, ``"2.5"`` or ``"5/2"`` and return 2k."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"k must look like 2, 2.5 or 5/2, got {text!r}") from None
    doubled = 2 * value
    if doubled.denominator != 1 or doubled < 0:
        raise argparse.ArgumentTypeError(f"k must be a nonnegative multiple of 1/2, got {text!r}")
    return int(doubled)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


# --- output helpers ------------------------------------------------------------


def _meta(args: argparse.Namespace) -> dict:
    meta = {"command": args.command, "version": __version__}
    if getattr(args, "two_k", None) is not None:
        meta["k"] = half_label(args.two_k)
    if getattr(args, "n", None) is not None:
        meta["n"] = args.n
    if getattr(args, "basis", None) is not None:
        meta["basis"] = args.basis
    return meta


def _comment(meta: dict, prefix: str = "#") -> str:
    fields = " ".join(f"{k}={v}" for k, v in meta.items() if k != "version")
    return f"{prefix} partalg {meta['version']} {fields}\n"


def _emit_json(meta: dict, payload: dict) -> str:
    return json.dumps({"meta": meta, **payload}, indent=2) + "\n"


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('two_k', 'k')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _read_element(token: str, args: argparse.Namespace) -> alg.AlgebraElement:
    """An element given as JSON, as @file holding JSON, or as a bare set partition (coefficient 1)."""
    if token.startswith("@"):
        try:
            token = Path(token[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {token[1:]}: {exc.strerror}") from None
    text = token.strip()
    if text.startswith("{"):
        e = alg.AlgebraElement.from_json(text)
        if args.n is not None and e.n != args.n:
            raise UsageError(f"element has n={e.n} but --n {args.n} was given")
        if args.two_k is not None and e.two_k != args.two_k:
            raise UsageError(f"element has two_k={e.two_k} but --k gives two_k={args.two_k}")
        return e
    _require(args, "two_k", "n")
    pi = SetPartition.parse(text, 2 * alg.columns(args.two_k))
    try:
        return alg.AlgebraElement(args.two_k, args.n, args.basis or alg.DIAGRAM, {pi: 1})
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _element_text(e: alg.AlgebraElement) -> str:
    return f"{e}\n"


def _element_out(args: argparse.Namespace, e: alg.AlgebraElement) -> str:
    meta = _meta(args)
    meta.update(k=half_label(e.two_k), n=e.n, basis=e.basis)
    if args.format == "json":
        return _emit_json(meta, {"element": e.to_dict()})
    if args.format == "text":
        return _comment(meta) + _element_text(e)
    raise UsageError(f"format {args.format} is not available for elements")


# --- subcommands -------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> tuple[str, int]:
    max_two_k = args.two_k if args.two_k is not None else 12
    max_n = args.max_n
    rows = bell_table(max_two_k, max_n)
    meta = _meta(args)
    meta.update(max_k=half_label(max_two_k), max_n=max_n)
    meta.pop("k", None)
    if args.format == "json":
        return _emit_json(meta, {"rows": rows}), EXIT_OK
    if args.format in ("csv", "text"):
        return table_to_csv(rows, _comment(meta).lstrip("# ").rstrip()), EXIT_OK
    raise UsageError("table supports csv, json and text")


def cmd_dims(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "two_k", "n")
    two_k, n = args.two_k, args.n
    data = {
        "restricted_bell": restricted_bell(two_k, n),
        "bell": bell(two_k),
        "orbit_count": orbit_count(two_k, n),
        "image_dimension": image_dimension(two_k, n, budget=args.budget),
        "kernel_dimension": len(kernel_basis(two_k, n)),
    }
    meta = _meta(args)
    if args.format == "json":
        return _emit_json(meta, data), EXIT_OK
    if args.format == "csv":
        return _comment(meta) + ",".join(data) + "\n" + ",".join(str(v) for v in data.values()) + "\n", EXIT_OK
    return _comment(meta) + "".join(f"{k}: {v}\n" for k, v in data.items()), EXIT_OK


def cmd_mult(args: argparse.Namespace) -> tuple[str, int]:
    if len(args.elements) < 2:
        raise UsageError("mult needs at least two elements")
    elems = [_read_element(tok, args) for tok in args.elements]
    result = elems[0]
    for e in elems[1:]:
        if result.basis == alg.ORBIT and e.basis == alg.ORBIT:
            result = alg.multiply_orbit(result, e, mode=args.mode)
        else:
            result = alg.multiply(result, e)
            if args.mode == "image":
                result = alg.to_diagram(alg.truncate(result))
    return _element_out(args, result), EXIT_OK


def cmd_convert(args: argparse.Namespace) -> tuple[str, int]:
    e = _read_element(args.element, args)
    target = args.to or (alg.DIAGRAM if e.basis == alg.ORBIT else alg.ORBIT)
    return _element_out(args, alg.change_basis(e, target)), EXIT_OK


def cmd_phi(args: argparse.Namespace) -> tuple[str, int]:
    e = _read_element(args.element, args)
    mat = represent(e, budget=args.budget)
    meta = _meta(args)
    meta.update(k=half_label(e.two_k), n=e.n, basis=e.basis, dim=mat.dim)
    if args.format == "json":
        return mat.to_json(meta=meta, k=half_label(e.two_k), n=e.n) + "\n", EXIT_OK
    return _comment(meta) + mat.to_triples(), EXIT_OK


def cmd_bratteli(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "n")
    max_two_level = args.two_k if args.two_k is not None else 8
    diagram = build_bratteli(args.n, max_two_level)
    meta = _meta(args)
    if args.format == "dot":
        return diagram.to_dot(_comment(meta, "").strip()), EXIT_OK
    if args.format == "json":
        return _emit_json(meta, diagram.to_dict()), EXIT_OK
    return _comment(meta) + diagram.to_text(), EXIT_OK


def cmd_bijection(args: argparse.Namespace) -> tuple[str, int]:
    if (args.tableau is None) == (args.vacillating is None):
        raise UsageError("give exactly one of --tableau or --vacillating")
    trace: list[TraceStep] = []
    try:
        if args.tableau is not None:
            spt = SetPartitionTableau.parse(args.tableau)
            vt = bijection_A(spt, trace)
            back = bijection_B(vt)
            ok = back == spt
            direction = "tableau -> vacillating"
        else:
            vt = VacillatingTableau.parse(args.vacillating)
            spt = bijection_B(vt, trace)
            ok = bijection_A(spt) == vt
            direction = "vacillating -> tableau"
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    sp = spt.set_partition()
    meta = _meta(args)
    meta.update(n=vt.n, k=vt.k)
    report = {
        "direction": direction,
        "set_partition_tableau": spt.to_dict(),
        "vacillating_tableau": vt.to_dict(),
        "set_partition": None if sp is None else str(sp),
        "round_trip": ok,
    }
    status = EXIT_OK if ok else EXIT_VERIFY
    if args.format == "json":
        return _emit_json(meta, report), status
    lines = [
        _comment(meta).rstrip(),
        f"direction: {direction}",
        f"vacillating tableau: {vt}",
        f"set partition: {report['set_partition']}",
        f"round trip: {'ok' if ok else 'FAILED'}",
        "",
        step_trace(trace),
    ]
    return "\n".join(lines), status


def cmd_char(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "n")
    n = args.n
    meta = _meta(args)
    if args.two_k is None:
        if args.format == "json":
            from .characters import character_table

            rows = [{"lambda": str(r.lam), "values": {str(d): v for d, v in r.values.items()}} for r in character_table(n)]
            return _emit_json(meta, {"character_table": rows}), EXIT_OK
        return character_table_csv(n, _comment(meta).lstrip("# ").rstrip()), EXIT_OK
    two_k = args.two_k
    if args.mu is not None:
        if two_k % 2:
            raise UsageError("character values are defined for integer k")
        k = two_k // 2
        mu = IntegerPartition.parse(args.mu)
        values = [
            {"lambda": str(lam), "mu": str(mu), "k": k, "n": n, "value": fraction_str(partition_algebra_character(lam, mu, k, n))}
            for lam in integer_partitions(n)
        ]
        if args.format == "csv":
            body = "lambda,mu,k,n,value\n" + "".join(f"\"{v['lambda']}\",\"{v['mu']}\",{k},{n},{v['value']}\n" for v in values)
            return _comment(meta) + body, EXIT_OK
        return _emit_json(meta, {"characters": values}), EXIT_OK
    # multiplicities by every formula
    rows = []
    if two_k % 2 == 0:
        k = two_k // 2
        for lam in integer_partitions(n):
            vals = {m: multiplicity(lam, k, n, m) for m in ("character", "stirling_skew", "bratteli")}
            rows.append({"lambda": str(lam), **vals})
    else:
        k = two_k // 2
        for mu in integer_partitions(n - 1):
            vals = {m: half_multiplicity(mu, k, n, m) for m in ("character", "stirling_skew", "bratteli")}
            rows.append({"lambda": str(mu), **vals})
    agree = all(len({r["character"], r["stirling_skew"], r["bratteli"]}) == 1 for r in rows)
    status = EXIT_OK if agree else EXIT_VERIFY
    if args.format == "json":
        return _emit_json(meta, {"multiplicities": rows, "formulas_agree": agree}), status
    body = "lambda,character,stirling_skew,bratteli\n" + "".join(
        f"\"{r['lambda']}\",{r['character']},{r['stirling_skew']},{r['bratteli']}\n" for r in rows
    )
    return _comment(meta) + body, status


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    records = run_suites(names, seed=args.seed)
    failed = [r for r in records if r["status"] == "fail"]
    meta = _meta(args)
    meta.update(suite=args.suite, seed=args.seed)
    summary = {
        "passed": sum(r["status"] == "pass" for r in records),
        "failed": len(failed),
        "notes": sum(r["status"] == "note" for r in records),
        "skipped": sum(r["status"] == "skipped" for r in records),
    }
    status = EXIT_VERIFY if failed else EXIT_OK
    if args.format == "json":
        return _emit_json(meta, {"summary": summary, "checks": records}), status
    lines = [_comment(meta).rstrip()]
    for r in records:
        lines.append(f"{r['status'].upper():7} {r['suite']}: {r['name']}")
    lines.append(" ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines) + "\n", status


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "mult": cmd_mult,
    "convert": cmd_convert,
    "phi": cmd_phi,
    "bratteli": cmd_bratteli,
    "bijection": cmd_bijection,
    "char": cmd_char,
    "dims": cmd_dims,
}

DEFAULT_FORMATS = {
    "table": "csv",
    "verify": "json",
    "mult": "json",
    "convert": "json",
    "phi": "text",
    "bratteli": "dot",
    "bijection": "json",
    "char": "csv",
    "dims": "json",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, help="the parameter n (size of the symmetric group)")
    common.add_argument("--k", dest="two_k", type=parse_two_k, help="k, integer or half-integer (2.5 or 5/2)")
    common.add_argument("--basis", choices=alg.BASES, help="basis for bare set-partition inputs")
    common.add_argument("--format", choices=("json", "csv", "dot", "text"))
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="largest matrix dimension n^k allowed")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--mode", choices=("abstract", "image"), default="abstract", help="orbit product mode")

    parser = argparse.ArgumentParser(prog="partalg", description="Exact computations in partition algebras P_k(n).")
    parser.add_argument("--version", action="version", version=f"partalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="restricted Bell numbers B(2k, n); --k sets the last row")
    p.add_argument("--max-n", type=_positive, default=8)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", choices=SUITES + EXTRA_SUITES + ("all",), default="all")

    p = sub.add_parser("mult", parents=[common], help="multiply elements left to right")
    p.add_argument("elements", nargs="+", help="set partition like 1,3|2,4, element JSON, or @file")

    p = sub.add_parser("convert", parents=[common], help="change basis")
    p.add_argument("element")
    p.add_argument("--to", choices=alg.BASES)

    p = sub.add_parser("phi", parents=[common], help="matrix of an element on the tensor space")
    p.add_argument("element")

    sub.add_parser("bratteli", parents=[common], help="branching graph through level --k (default 4)")

    p = sub.add_parser("bijection", parents=[common], help="run the tableau bijection")
    p.add_argument("--tableau", help='set-partition tableau, e.g. "0 6 / 2 4,7 / 1,3,5"')
    p.add_argument("--vacillating", help='shape sequence, e.g. "[2];[1];[2]"')

    p = sub.add_parser("char", parents=[common], help="character table, multiplicities or partition algebra characters")
    p.add_argument("--mu", help="cycle-type partition for partition algebra character values")

    sub.add_parser("dims", parents=[common], help="dimensions of the image and kernel at (k, n)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.format is None:
        args.format = DEFAULT_FORMATS[args.command]
    try:
        text, status = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"partalg: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError) as exc:
        print(f"partalg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PartalgError, ValueError, IndexError) as exc:
        print(f"partalg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
