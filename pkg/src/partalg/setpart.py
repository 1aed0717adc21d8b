"""Set partitions of {1, ..., m}, the refinement order and its Moebius function."""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, OrderError, ParityError, ParseError


class SetPartition:
    """A partition of ``{1, ..., m}`` into nonempty blocks.

    Blocks are stored canonically: each block is a sorted tuple and the blocks
    are ordered by their minimum.  Equality and hashing use this form.
    """

    __slots__ = ("m", "blocks", "_hash")

    def __init__(self, blocks: Iterable[Iterable[int]], m: int | None = None):
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("blocks must be nonempty")
            for v in b:
                if v in seen:
                    raise ValueError(f"element {v} occurs in two blocks")
                seen.add(v)
        if m is None:
            m = max(seen, default=0)
        if m < 1:
            raise ValueError("ground set must be nonempty")
        if seen != set(range(1, m + 1)):
            raise ValueError(f"blocks do not cover exactly 1..{m}")
        self.m = m
        self.blocks: tuple[tuple[int, ...], ...] = tuple(canon)
        self._hash = hash((m, self.blocks))

    @classmethod
    def _trusted(cls, m: int, blocks: tuple[tuple[int, ...], ...]) -> "SetPartition":
        # blocks must already be canonical
        obj = object.__new__(cls)
        obj.m = m
        obj.blocks = blocks
        obj._hash = hash((m, blocks))
        return obj

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Build from a label sequence: elements i+1 and j+1 share a block iff labels agree."""
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(i)
        return cls._trusted(len(labels), tuple(sorted((tuple(g) for g in groups.values()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.m == other.m and self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SetPartition") -> bool:
        return (self.m, self.rgs()) < (other.m, other.rgs())

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self})"

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def rgs(self) -> tuple[int, ...]:
        """Restricted growth string: position i holds the index of the block containing i+1."""
        out = [0] * self.m
        for idx, b in enumerate(self.blocks):
            for v in b:
                out[v - 1] = idx
        return tuple(out)

    def block_of(self) -> dict[int, int]:
        return {v: idx for idx, b in enumerate(self.blocks) for v in b}

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    @classmethod
    def parse(cls, text: "str | Sequence[Sequence[int]]", m: int | None = None) -> "SetPartition":
        """Read either ``"1,4,5|2,8|3,6,7"`` or a JSON array of arrays (string or list)."""
        if not isinstance(text, str):
            return _checked(cls, text, m)
        s = text.strip()
        if s.startswith("["):
            try:
                data = json.loads(s)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON set partition: {exc.msg}", exc.pos) from None
            if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
                raise ParseError("expected an array of arrays", 0)
            return _checked(cls, data, m)
        blocks: list[list[int]] = []
        pos = 0
        for chunk in s.split("|"):
            block = []
            for tok in chunk.split(","):
                t = tok.strip()
                if not t.isdigit():
                    raise ParseError(f"expected a positive integer, got {tok!r}", pos)
                block.append(int(t))
                pos += len(tok) + 1
            blocks.append(block)
        return _checked(cls, blocks, m)


def _checked(cls, blocks, m):
    try:
        return cls(blocks, m)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def _rgs_strings(m: int, max_blocks: int | None) -> Iterator[list[int]]:
    cap = m if max_blocks is None else max_blocks
    word = [0] * m

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == m:
            yield word
            return
        top = min(used + 1, cap)
        for lab in range(top):
            word[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    yield from rec(1, 1)


def _blocks_from_rgs(word: Sequence[int], count: int) -> tuple[tuple[int, ...], ...]:
    groups: list[list[int]] = [[] for _ in range(count)]
    for i, lab in enumerate(word, start=1):
        groups[lab].append(i)
    return tuple(tuple(g) for g in groups)


@lru_cache(maxsize=64)
def _enumerate_cached(m: int, max_blocks: int | None) -> tuple[SetPartition, ...]:
    out = []
    for word in _rgs_strings(m, max_blocks):
        out.append(SetPartition._trusted(m, _blocks_from_rgs(word, max(word) + 1)))
    return tuple(out)


def enumerate_set_partitions(m: int, max_blocks: int | None = None) -> list[SetPartition]:
    """All set partitions of [1, m] in restricted-growth-string order."""
    if m < 1:
        raise ValueError("empty ground set")
    if max_blocks is not None and max_blocks < 1:
        raise ValueError("max_blocks must be positive")
    return list(_enumerate_cached(m, max_blocks))


def is_refinement(pi: SetPartition, rho: SetPartition) -> bool:
    """True when every block of ``pi`` sits inside a block of ``rho``."""
    if pi.m != rho.m:
        raise DimensionError(f"ground sets differ: {pi.m} vs {rho.m}")
    where = rho.block_of()
    return all(len({where[v] for v in b}) == 1 for b in pi.blocks)


@lru_cache(maxsize=32)
def _merge_patterns(count: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(w) for w in _rgs_strings(count, None))


def merge_blocks(pi: SetPartition, pattern: Sequence[int]) -> SetPartition:
    """Merge block i of ``pi`` into group ``pattern[i]``."""
    groups: dict[int, list[int]] = {}
    for b, lab in zip(pi.blocks, pattern):
        groups.setdefault(lab, []).extend(b)
    merged = sorted(tuple(sorted(g)) for g in groups.values())
    return SetPartition._trusted(pi.m, tuple(merged))


def coarsenings(pi: SetPartition) -> list[SetPartition]:
    """Every set partition coarser than or equal to ``pi``, coarsest first and ``pi`` itself last."""
    return [merge_blocks(pi, w) for w in _merge_patterns(len(pi))]


def coarsenings_with_mobius(pi: SetPartition) -> list[tuple[SetPartition, int]]:
    """Pairs (rho, mu(pi, rho)) over all coarsenings rho of pi."""
    out = []
    for w in _merge_patterns(len(pi)):
        sizes: dict[int, int] = {}
        for lab in w:
            sizes[lab] = sizes.get(lab, 0) + 1
        out.append((merge_blocks(pi, w), _mobius_from_sizes(sizes.values())))
    return out


def _mobius_from_sizes(sizes: Iterable[int]) -> int:
    value = 1
    for b in sizes:
        value *= (-1) ** (b - 1) * factorial(b - 1)
    return value


def mobius(pi: SetPartition, rho: SetPartition) -> int:
    """Moebius function of the refinement lattice, by the product formula."""
    if pi.m != rho.m:
        raise DimensionError(f"ground sets differ: {pi.m} vs {rho.m}")
    where = rho.block_of()
    counts: dict[int, int] = {}
    for b in pi.blocks:
        targets = {where[v] for v in b}
        if len(targets) != 1:
            raise OrderError(f"{pi} does not refine {rho}")
        t = targets.pop()
        counts[t] = counts.get(t, 0) + 1
    return _mobius_from_sizes(counts.values())


def restrict(pi: SetPartition, elements: Sequence[int]) -> SetPartition:
    """Partition induced on ``elements``, relabelled 1..len(elements) in the given order."""
    index = {v: i for i, v in enumerate(elements, start=1)}
    blocks = [[index[v] for v in b if v in index] for b in pi.blocks]
    return SetPartition._trusted(
        len(elements), tuple(sorted(tuple(sorted(b)) for b in blocks if b))
    )


def propagating_data(pi: SetPartition) -> tuple[SetPartition, SetPartition, int]:
    """(bottom-row partition, top-row partition reduced mod k, number of blocks)."""
    if pi.m % 2:
        raise ParityError(f"ground set size {pi.m} is odd")
    k = pi.m // 2
    bottom = restrict(pi, range(1, k + 1))
    top = restrict(pi, range(k + 1, 2 * k + 1))
    return bottom, top, len(pi)


def identity_partition(k: int) -> SetPartition:
    """The pattern {1,k+1 | 2,k+2 | ... | k,2k}."""
    return SetPartition._trusted(2 * k, tuple((i, k + i) for i in range(1, k + 1)))
