"""The branching graph for S_n > S_{n-1}, vacillating tableaux, set-partition
tableaux and the insertion bijection between them.

A set-partition tableau is stored row by row; each cell holds a frozenset of
labels, and the empty frozenset ``ZERO`` stands for a zero box.  Boxes are
compared by their largest label, with zero below every nonzero box.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinatorics import (
    IntegerPartition,
    add_box,
    as_partition,
    changed_row,
    remove_box,
)
from .setpart import SetPartition, enumerate_set_partitions

ZERO: frozenset[int] = frozenset()

Box = frozenset
Rows = tuple[tuple[frozenset, ...], ...]


def box_key(box: frozenset) -> int:
    return max(box) if box else 0


def _half(two_level: int) -> str:
    return str(two_level // 2) if two_level % 2 == 0 else f"{two_level}/2"


# --- Bratteli diagram ------------------------------------------------------------


def path_counts(n: int, max_two_level: int) -> list[dict[IntegerPartition, int]]:
    """Number of paths from [n] to each vertex, for levels 0, 1/2, 1, ... (indexed by 2*level)."""
    if n < 1:
        raise ValueError("n must be positive")
    levels = [{IntegerPartition([n]): 1}]
    for two_level in range(1, max_two_level + 1):
        step = remove_box if two_level % 2 else add_box
        nxt: dict[IntegerPartition, int] = {}
        for lam, count in levels[-1].items():
            for child in step(lam):
                nxt[child] = nxt.get(child, 0) + count
        levels.append(dict(sorted(nxt.items(), reverse=True)))
    return levels


class BratteliDiagram:
    """Vertices and path counts of the restriction-induction graph, levels 0 .. max_two_level/2.

    Edges are implicit: a half level is reached by removing a box, an integer
    level by adding one, and every edge has multiplicity 1.
    """

    def __init__(self, n: int, max_two_level: int):
        self.n = n
        self.max_two_level = max_two_level
        self.levels = path_counts(n, max_two_level)

    def vertices(self, two_level: int) -> list[IntegerPartition]:
        return list(self.levels[two_level])

    def count(self, two_level: int, lam: Sequence[int]) -> int:
        return self.levels[two_level].get(as_partition(lam), 0)

    def edges(self, two_level: int) -> list[tuple[IntegerPartition, IntegerPartition]]:
        """Edges from level two_level-1 to level two_level."""
        step = remove_box if two_level % 2 else add_box
        return [(a, b) for a in self.levels[two_level - 1] for b in step(a)]

    def sum_of_squares(self, two_level: int) -> int:
        return sum(c * c for c in self.levels[two_level].values())

    def to_dot(self, header: str | None = None) -> str:
        lines = []
        if header:
            lines.append(f"// {header}")
        lines.append("digraph bratteli {")
        lines.append("  rankdir=TB;")
        for two_level, level in enumerate(self.levels):
            names = " ".join(f'"{two_level}:{lam}"' for lam in level)
            lines.append(f"  {{ rank=same; {names} }}")
            for lam, count in level.items():
                lines.append(f'  "{two_level}:{lam}" [label="{lam}:{count}"];')
        for two_level in range(1, len(self.levels)):
            for a, b in self.edges(two_level):
                lines.append(f'  "{two_level - 1}:{a}" -> "{two_level}:{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "levels": [
                {"level": _half(t), "vertices": [{"partition": str(lam), "count": c} for lam, c in level.items()]}
                for t, level in enumerate(self.levels)
            ],
        }

    def to_text(self) -> str:
        out = []
        for t, level in enumerate(self.levels):
            cells = "  ".join(f"{lam}:{c}" for lam, c in level.items())
            out.append(f"{_half(t):>5}  {cells}")
        return "\n".join(out) + "\n"


def build_bratteli(n: int, max_two_level: int) -> BratteliDiagram:
    if n < 2:
        raise ValueError("the branching graph needs n >= 2")
    if max_two_level < 0:
        raise ValueError("max_two_level must be nonnegative")
    return BratteliDiagram(n, max_two_level)


# --- vacillating tableaux ------------------------------------------------------------


@dataclass(frozen=True)
class VacillatingTableau:
    """Shapes at levels 0, 1/2, 1, ..., k; ``shapes[j]`` is the shape at level j/2."""

    n: int
    k: int
    shapes: tuple[IntegerPartition, ...]

    def __post_init__(self) -> None:
        shapes = tuple(as_partition(s) for s in self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if len(shapes) != 2 * self.k + 1:
            raise ValueError(f"expected {2 * self.k + 1} shapes, got {len(shapes)}")
        if shapes[0] != IntegerPartition([self.n]):
            raise ValueError(f"must start at [{self.n}]")
        for j in range(1, len(shapes)):
            step = remove_box if j % 2 else add_box
            if shapes[j] not in step(shapes[j - 1]):
                verb = "remove" if j % 2 else "add"
                raise ValueError(f"step {_half(j)} does not {verb} one box: {shapes[j - 1]} -> {shapes[j]}")

    @property
    def shape(self) -> IntegerPartition:
        return self.shapes[-1]

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "shapes": [str(s) for s in self.shapes]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "VacillatingTableau":
        return cls(int(data["n"]), int(data["k"]), tuple(as_partition(s) for s in data["shapes"]))

    @classmethod
    def parse(cls, text: str) -> "VacillatingTableau":
        """Read ``[5];[4];[4,1];...`` (shapes separated by semicolons)."""
        shapes = [IntegerPartition.parse(s) for s in text.split(";") if s.strip()]
        if not shapes or len(shapes) % 2 == 0:
            raise ValueError("a vacillating tableau has an odd number of shapes")
        return cls(shapes[0].size, (len(shapes) - 1) // 2, tuple(shapes))

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.shapes)


def enumerate_vacillating(lam: Sequence[int], k: int, n: int) -> list[VacillatingTableau]:
    """All vacillating tableaux of shape lam and length k, in lexicographic order of shape sequences."""
    lam = as_partition(lam)
    if lam.size != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    counts = path_counts(n, 2 * k)
    # backwards reachability prunes dead branches
    alive: list[set[IntegerPartition]] = [set() for _ in range(2 * k + 1)]
    alive[2 * k] = {lam} if lam in counts[2 * k] else set()
    for t in range(2 * k - 1, -1, -1):
        step = remove_box if (t + 1) % 2 else add_box
        alive[t] = {mu for mu in counts[t] if any(c in alive[t + 1] for c in step(mu))}
    out: list[VacillatingTableau] = []
    path = [IntegerPartition([n])]

    def rec(t: int) -> None:
        if t == 2 * k:
            out.append(VacillatingTableau(n, k, tuple(path)))
            return
        step = remove_box if (t + 1) % 2 else add_box
        for child in sorted(step(path[-1])):
            if child in alive[t + 1]:
                path.append(child)
                rec(t + 1)
                path.pop()

    if IntegerPartition([n]) in alive[0]:
        rec(0)
    return out


def halves_split(vt: VacillatingTableau) -> tuple[VacillatingTableau, VacillatingTableau]:
    """Cut a shape-[n] tableau of even length 2k into its first half and reversed second half."""
    if vt.k % 2 or vt.shape != IntegerPartition([vt.n]):
        raise ValueError("halves_split needs shape [n] and even length")
    half = vt.k // 2
    first = vt.shapes[: 2 * half + 1]
    second = tuple(reversed(vt.shapes[2 * half :]))
    return VacillatingTableau(vt.n, half, first), VacillatingTableau(vt.n, half, second)


def halves_join(first: VacillatingTableau, second: VacillatingTableau) -> VacillatingTableau:
    if first.shape != second.shape or first.k != second.k or first.n != second.n:
        raise ValueError("halves must have equal n, length and shape")
    shapes = first.shapes + tuple(reversed(second.shapes))[1:]
    return VacillatingTableau(first.n, 2 * first.k, shapes)


# --- set-partition tableaux ------------------------------------------------------------


def _as_rows(rows: Sequence[Sequence[frozenset]]) -> Rows:
    return tuple(tuple(frozenset(b) for b in row) for row in rows if len(row))


def rows_shape(rows: Rows) -> IntegerPartition:
    return IntegerPartition(len(r) for r in rows)


def is_semistandard(rows: Rows) -> bool:
    """Rows weakly increase (zeros tie, nonzero strictly); columns strictly increase; zeros only in row 1."""
    for r, row in enumerate(rows):
        keys = [box_key(b) for b in row]
        if r > 0 and 0 in keys:
            return False
        for a, b in zip(keys, keys[1:]):
            if a > b or (a == b and a != 0):
                return False
        if r > 0:
            above = rows[r - 1]
            if len(above) < len(row):
                return False
            if any(box_key(above[c]) >= keys[c] for c in range(len(row))):
                return False
    return all(len(a) >= len(b) for a, b in zip(rows, rows[1:]))


class SetPartitionTableau:
    """A filling of a Young diagram of size n by zeros and the blocks of a set partition of [1, k]."""

    __slots__ = ("n", "k", "rows")

    def __init__(self, rows: Sequence[Sequence[frozenset | Sequence[int] | int]], k: int, n: int | None = None):
        norm = []
        for row in rows:
            cells = []
            for b in row:
                if isinstance(b, int):
                    if b != 0:
                        raise ValueError("integer cells must be 0")
                    b = ZERO
                cells.append(frozenset(b))
            if cells:
                norm.append(tuple(cells))
        self.rows: Rows = tuple(norm)
        self.k = k
        self.n = sum(len(r) for r in self.rows) if n is None else n
        self.validate()

    def validate(self) -> None:
        if sum(len(r) for r in self.rows) != self.n:
            raise ValueError("number of boxes differs from n")
        shape = rows_shape(self.rows)  # raises if rows are not weakly decreasing
        del shape
        zeros = [b for row in self.rows for b in row if not b]
        t = self.n - len(zeros)
        if self.rows and any(b for b in self.rows[0][: len(zeros)]):
            raise ValueError("the zero boxes must be the first cells of row 1")
        labels = sorted(v for row in self.rows for b in row for v in b)
        if labels != list(range(1, self.k + 1)):
            raise ValueError(f"nonzero boxes must partition 1..{self.k}")
        if not is_semistandard(self.rows):
            raise ValueError("boxes are not increasing along rows and columns")
        if t < self.shape.sharp().size:
            raise ValueError("too few nonzero boxes for this shape")

    @property
    def shape(self) -> IntegerPartition:
        return rows_shape(self.rows)

    @property
    def t(self) -> int:
        return sum(1 for row in self.rows for b in row if b)

    def set_partition(self) -> SetPartition | None:
        """Blocks carried by the nonzero boxes, or None when k = 0."""
        if self.k == 0:
            return None
        return SetPartition([sorted(b) for row in self.rows for b in row if b], self.k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartitionTableau):
            return NotImplemented
        return (self.n, self.k, self.rows) == (other.n, other.k, other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.rows))

    def __repr__(self) -> str:
        return f"SetPartitionTableau({format_rows(self.rows)!r}, k={self.k})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "shape": str(self.shape),
            "rows": [[sorted(b) for b in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SetPartitionTableau":
        rows = [[frozenset(b) for b in row] for row in data["rows"]]
        return cls(rows, int(data["k"]), int(data["n"]) if "n" in data else None)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "SetPartitionTableau":
        """Read rows separated by ``/``, boxes by spaces, labels in a box by commas; ``0`` is a zero box.

        Example: ``"0 6 / 2 4,7 / 1,3,5"``.
        """
        rows = []
        for chunk in text.split("/"):
            row = []
            for tok in chunk.split():
                if tok == "0":
                    row.append(ZERO)
                else:
                    row.append(frozenset(int(v) for v in tok.split(",")))
            rows.append(row)
        if k is None:
            k = max((v for row in rows for b in row for v in b), default=0)
        return cls(rows, k)


def format_rows(rows: Rows) -> str:
    return " / ".join(" ".join(",".join(map(str, sorted(b))) if b else "0" for b in row) for row in rows)


def render_rows(rows: Rows) -> str:
    """Multi-line picture in English notation, one line per row."""
    if not rows:
        return "(empty)"
    return "\n".join(" ".join("[" + (",".join(map(str, sorted(b))) if b else "0") + "]" for b in row) for row in rows)


def _standard_skew_fillings(outer: IntegerPartition, inner_first_row: int) -> Iterator[list[tuple[int, int]]]:
    """Orders in which the cells of outer / [inner_first_row] can be filled by 1, 2, ..."""
    current = [inner_first_row if r == 0 else 0 for r in range(len(outer))]
    total = outer.size - inner_first_row
    order: list[tuple[int, int]] = []

    def rec() -> Iterator[list[tuple[int, int]]]:
        if len(order) == total:
            yield list(order)
            return
        for r in range(len(outer)):
            if current[r] < outer[r] and (r == 0 or current[r - 1] > current[r]):
                order.append((r, current[r]))
                current[r] += 1
                yield from rec()
                current[r] -= 1
                order.pop()

    yield from rec()


def enumerate_spt(lam: Sequence[int], k: int, n: int) -> list[SetPartitionTableau]:
    """All set-partition tableaux of shape lam with labels 1..k."""
    lam = as_partition(lam)
    if lam.size != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    out = []
    low = lam.sharp().size
    for t in range(low, n + 1):
        if (k == 0) != (t == 0) or t > k:
            continue
        if lam[0] < n - t:
            continue
        partitions = [None] if k == 0 else enumerate_set_partitions(k, t)
        for sp in partitions:
            if sp is not None and len(sp) != t:
                continue
            boxes = [] if sp is None else sorted((frozenset(b) for b in sp.blocks), key=max)
            for order in _standard_skew_fillings(lam, n - t):
                grid = [[ZERO] * length for length in lam]
                for label, (r, c) in enumerate(order):
                    grid[r][c] = boxes[label]
                out.append(SetPartitionTableau(grid, k, n))
    return out


# --- Schensted insertion on box maxima ----------------------------------------------


def _rows_of(tableau: "SetPartitionTableau | Rows") -> Rows:
    return tableau.rows if isinstance(tableau, SetPartitionTableau) else _as_rows(tableau)


def schensted_insert(tableau: "SetPartitionTableau | Rows", box: frozenset) -> tuple[Rows, tuple[int, int]]:
    """Row-insert ``box``; return the new rows and the cell that was created."""
    rows = [list(r) for r in _rows_of(tableau)]
    carry = frozenset(box)
    r = 0
    while True:
        if r == len(rows):
            rows.append([carry])
            return tuple(tuple(x) for x in rows), (r, 0)
        row = rows[r]
        key = box_key(carry)
        pos = next((c for c, b in enumerate(row) if box_key(b) > key), None)
        if pos is None:
            row.append(carry)
            return tuple(tuple(x) for x in rows), (r, len(row) - 1)
        row[pos], carry = carry, row[pos]
        r += 1


def schensted_uninsert(tableau: "SetPartitionTableau | Rows", cell: tuple[int, int]) -> tuple[Rows, frozenset]:
    """Reverse insertion starting from the corner ``cell``; return the rows and the ejected box."""
    rows = [list(r) for r in _rows_of(tableau)]
    r, c = cell
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError(f"cell {cell} is not a removable corner")
    carry = rows[r].pop()
    for above in range(r - 1, -1, -1):
        row = rows[above]
        key = box_key(carry)
        pos = max((j for j, b in enumerate(row) if box_key(b) < key), default=None)
        if pos is None:
            raise ValueError("malformed tableau: nothing to bump during un-insertion")
        row[pos], carry = carry, row[pos]
    return tuple(tuple(x) for x in rows if x), carry


# --- the bijection ----------------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    label: str
    rows: Rows


def bijection_A(spt: SetPartitionTableau, trace: list[TraceStep] | None = None) -> VacillatingTableau:
    """Set-partition tableau -> vacillating tableau, peeling labels k, k-1, ..., 1.

    For each label j: remove the box holding j (it is the largest box, hence a
    corner), delete j from it (an emptied box becomes a zero), and row-insert
    the result.  The shapes after each half step are recorded.
    """
    rows = spt.rows
    shapes = [rows_shape(rows)]
    if trace is not None:
        trace.append(TraceStep(f"j={spt.k}", rows))
    for j in range(spt.k, 0, -1):
        where = [(r, c) for r, row in enumerate(rows) for c, b in enumerate(row) if j in b]
        if len(where) != 1:
            raise ValueError(f"label {j} does not occur exactly once")
        r, c = where[0]
        work = [list(x) for x in rows]
        if c != len(work[r]) - 1 or (r + 1 < len(work) and len(work[r + 1]) > c):
            raise ValueError(f"box holding {j} is not a corner")
        box = work[r].pop()
        rows = tuple(tuple(x) for x in work if x)
        shapes.append(rows_shape(rows))
        rows, _ = schensted_insert(rows, box - {j})
        if not is_semistandard(rows):
            raise AssertionError("insertion broke the row/column order")
        shapes.append(rows_shape(rows))
        if trace is not None:
            trace.append(TraceStep(f"j={j - 1}", rows))
    shapes.reverse()
    return VacillatingTableau(spt.n, spt.k, tuple(shapes))


def bijection_B(vt: VacillatingTableau, trace: list[TraceStep] | None = None) -> SetPartitionTableau:
    """Vacillating tableau -> set-partition tableau, the inverse of ``bijection_A``.

    Starting from a row of n zeros, step j un-inserts the box at the cell
    removed between levels j and j+1/2, adds label j+1 to it (an added label
    replaces a zero), and places it in the cell added at level j+1.
    """
    rows: Rows = ((ZERO,) * vt.n,) if vt.n else ()
    if trace is not None:
        trace.append(TraceStep("j=0", rows))
    for j in range(vt.k):
        before, middle, after = vt.shapes[2 * j], vt.shapes[2 * j + 1], vt.shapes[2 * j + 2]
        r = changed_row(middle, before)
        rows, box = schensted_uninsert(rows, (r, before[r] - 1))
        box = box | {j + 1}
        r2 = changed_row(middle, after)
        work = [list(x) for x in rows]
        if r2 == len(work):
            work.append([])
        work[r2].append(box)
        rows = tuple(tuple(x) for x in work)
        if not is_semistandard(rows):
            raise AssertionError("placement broke the row/column order")
        if trace is not None:
            trace.append(TraceStep(f"j={j + 1}", rows))
    return SetPartitionTableau(rows, vt.k, vt.n)


def step_trace(trace: list[TraceStep]) -> str:
    """Plain-text rendering of recorded steps, one tableau per step."""
    out = []
    for step in trace:
        out.append(step.label)
        out.append(render_rows(step.rows))
        out.append("")
    return "\n".join(out)
