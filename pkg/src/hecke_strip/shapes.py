"""Partitions, skew shapes, and standard skew tableaux.

A partition is a plain tuple of weakly decreasing positive integers (the
empty partition is ``()``); trailing zeros are never stored.  A skew shape
is the pair inner <= outer.  A standard skew tableau is stored as the path
it cuts through Young's lattice: the chain of partitions

    inner = p_0 < p_1 < ... < p_n = outer

where each step adds exactly one box.  The usual grid filling (box -> step
index) is derived from the chain, and the chain form makes the
standard-tableau condition automatic: whenever two skew boxes share a row or
column, the partition condition forces the earlier step to sit left/above.

Boxes use 1-based (row, col) coordinates.  The content of a box is
col - row; the axial distance between boxes is |row1-row2| + |col1-col2|.

Enumeration order of tableaux is lexicographic on the sequence of added-box
rows.  That sequence determines the tableau (within a fixed shape, the
column of a box added to a given row is forced), and this order is the
single source of truth for all matrix row/column indexing downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Normalize to a tuple, dropping trailing zeros; reject bad part lists."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
    return parts


def contains(inner: Partition, outer: Partition) -> bool:
    """Componentwise containment inner_i <= outer_i."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def parse_partition(text: str) -> Partition:
    """Comma-separated parts; "" or "0" denotes the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return check_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def all_partitions(max_size: int) -> Iterator[Partition]:
    """All partitions of every size 0..max_size, smaller sizes first."""
    for n in range(max_size + 1):
        yield from partitions_of(n)


def sub_partitions(outer: Partition) -> list[Partition]:
    """All partitions contained in outer, each part chosen largest-first."""
    results: list[Partition] = []

    def descend(i: int, prev: int, acc: list[int]) -> None:
        if i == len(outer):
            results.append(tuple(acc))
            return
        for v in range(min(outer[i], prev), 0, -1):
            acc.append(v)
            descend(i + 1, v, acc)
            acc.pop()
        results.append(tuple(acc))

    descend(0, outer[0] if outer else 0, [])
    return results


def young_successors(p: Partition) -> list[Partition]:
    """Partitions covering p in Young's lattice (one box added).

    Results are ordered by the row index of the added box.
    """
    out = []
    for row in range(1, len(p) + 2):
        if row == 1 or row_length(p, row) < row_length(p, row - 1):
            out.append(add_box(p, row))
    return out


def row_length(p: Partition, row: int) -> int:
    return p[row - 1] if row - 1 < len(p) else 0


def add_box(p: Partition, row: int) -> Partition:
    """Add one box at the end of the given (1-based) row."""
    if row - 1 < len(p):
        return p[: row - 1] + (p[row - 1] + 1,) + p[row:]
    if row != len(p) + 1:
        raise ValueError(f"cannot add a box in row {row} of {p}")
    return p + (1,)


class Box(NamedTuple):
    """A cell of a Young diagram, 1-based."""

    row: int
    col: int


def content(b: Box) -> int:
    """col - row; consecutive entries of a standard filling sit in boxes of
    different content unless they share a row or column."""
    return b.col - b.row


def axial_distance(b1: Box, b2: Box) -> int:
    """|row1 - row2| + |col1 - col2| for two distinct boxes."""
    if b1 == b2:
        raise ValueError("axial distance requires two distinct boxes")
    return abs(b1.row - b2.row) + abs(b1.col - b2.col)


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions inner <= outer; the shape is outer minus inner."""

    inner: Partition
    outer: Partition

    def __post_init__(self):
        object.__setattr__(self, "inner", check_partition(self.inner))
        object.__setattr__(self, "outer", check_partition(self.outer))
        if not contains(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        """Number of skew boxes."""
        return sum(self.outer) - sum(self.inner)

    def boxes(self) -> list[Box]:
        """The cells of outer not in inner, in row-major order."""
        out = []
        for r, outer_len in enumerate(self.outer, start=1):
            inner_len = row_length(self.inner, r)
            out.extend(Box(r, c) for c in range(inner_len + 1, outer_len + 1))
        return out

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "outer": list(self.outer)}

    @classmethod
    def from_json(cls, obj: dict) -> SkewShape:
        return cls(tuple(obj["inner"]), tuple(obj["outer"]))


def is_horizontal_strip(s: SkewShape) -> bool:
    """True iff no column holds two skew boxes; equivalently outer_{i+1} <= inner_i."""
    for i in range(1, len(s.outer)):
        if s.outer[i] > row_length(s.inner, i):
            return False
    return True


@dataclass(frozen=True)
class SkewTableau:
    """A standard filling of a skew shape, stored as a saturated chain."""

    chain: tuple[Partition, ...]

    def __post_init__(self):
        if not self.chain:
            raise ValueError("tableau chain must contain at least the inner shape")
        chain = tuple(check_partition(p) for p in self.chain)
        object.__setattr__(self, "chain", chain)
        added = []
        for prev, cur in zip(chain, chain[1:]):
            if sum(cur) != sum(prev) + 1 or not contains(prev, cur):
                raise ValueError(
                    f"chain step {prev} -> {cur} does not add exactly one box"
                )
            row = next(
                r for r in range(1, len(cur) + 1) if row_length(prev, r) != cur[r - 1]
            )
            added.append(Box(row, cur[row - 1]))
        object.__setattr__(self, "_added", tuple(added))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.chain[0], self.chain[-1])

    @property
    def size(self) -> int:
        return len(self.chain) - 1

    @property
    def added_boxes(self) -> tuple[Box, ...]:
        """Box added at each step, i.e. the box holding entry k is added_boxes[k-1]."""
        return self._added

    def box_of(self, entry: int) -> Box:
        if not 1 <= entry <= self.size:
            raise IndexError(f"entry {entry} outside 1..{self.size}")
        return self._added[entry - 1]

    def row_sequence(self) -> tuple[int, ...]:
        return tuple(b.row for b in self._added)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "boxes": [[b.row, b.col] for b in self._added],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SkewTableau:
        shape = SkewShape.from_json(obj["shape"])
        chain = [shape.inner]
        for row, _col in obj["boxes"]:
            chain.append(add_box(chain[-1], row))
        return cls(tuple(chain))

    def grid(self) -> dict[Box, int]:
        """Derived filling: box -> entry."""
        return {b: k + 1 for k, b in enumerate(self._added)}


def swap_entries(t: SkewTableau, k: int) -> SkewTableau:
    """Exchange entries k and k+1; valid only when their boxes share no row or column."""
    b1, b2 = t.box_of(k), t.box_of(k + 1)
    if b1.row == b2.row or b1.col == b2.col:
        raise ValueError(f"entries {k},{k + 1} share a row or column; swap is not standard")
    chain = list(t.chain)
    chain[k] = add_box(chain[k - 1], b2.row)
    return SkewTableau(tuple(chain))


@lru_cache(maxsize=None)
def _tableaux_cached(shape: SkewShape) -> tuple[SkewTableau, ...]:
    target = shape.outer
    out: list[SkewTableau] = []
    chain: list[Partition] = [shape.inner]

    def extend(cur: Partition) -> None:
        if cur == target:
            out.append(SkewTableau(tuple(chain)))
            return
        for row in range(1, len(target) + 1):
            cur_len = row_length(cur, row)
            if cur_len >= target[row - 1]:
                continue
            if row > 1 and row_length(cur, row - 1) <= cur_len:
                continue
            nxt = add_box(cur, row)
            chain.append(nxt)
            extend(nxt)
            chain.pop()

    extend(shape.inner)
    return tuple(out)


def enumerate_skew_tableaux(shape: SkewShape) -> list[SkewTableau]:
    """All standard tableaux of the shape, ordered lexicographically by the
    sequence of added-box rows.  This order defines basis indices everywhere."""
    return list(_tableaux_cached(shape))


def all_skew_shapes(
    max_outer_size: int, min_boxes: int = 0, max_boxes: int | None = None
) -> Iterator[SkewShape]:
    """Every skew shape with |outer| <= max_outer_size and a box count in range."""
    for outer in all_partitions(max_outer_size):
        n = sum(outer)
        for inner in sub_partitions(outer):
            k = n - sum(inner)
            if k < min_boxes:
                continue
            if max_boxes is not None and k > max_boxes:
                continue
            yield SkewShape(inner, outer)
