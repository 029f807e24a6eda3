"""Partitions, dual partitions, removable cells, and hook dimensions.

Coordinates are 1-based: row x counts from the top, column y from the
left, so the removable cell in column y sits at row dual(lam)[y].  That
convention is what the counting recursion consumes; it is pinned by the
end-to-end tests against the published polynomial values.
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import NamedTuple

from .errors import InvalidRankSequence


class RemovableCell(NamedTuple):
    index: int  # position in the removable-cell list, 0-based
    row: int
    col: int


class Partition:
    """Non-increasing positive parts; hashable value type."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be non-increasing: {ps}")
        self.parts = ps

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the comma-separated form, e.g. ``3,2,1,1``."""
        items = [t.strip() for t in text.split(",") if t.strip()]
        return cls(int(t) for t in items)

    @property
    def n(self) -> int:
        """Total being partitioned."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def dual(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        return Partition(
            sum(1 for p in self.parts if p >= i)
            for i in range(1, self.parts[0] + 1)
        )

    def removable_cells(self) -> list[RemovableCell]:
        """One cell per distinct part value, ordered by increasing column.

        The cell for part value v sits in the last row carrying v, at
        column v; removing it always leaves a valid partition.
        """
        cells = []
        seen = set()
        for row in range(len(self.parts), 0, -1):
            v = self.parts[row - 1]
            if v not in seen:
                seen.add(v)
                cells.append((row, v))
        cells.sort(key=lambda rc: rc[1])
        return [RemovableCell(j, row, col) for j, (row, col) in enumerate(cells)]

    def remove_cell(self, j: int) -> "Partition":
        """Partition left after removing the j-th removable cell."""
        cells = self.removable_cells()
        if not 0 <= j < len(cells):
            raise IndexError(f"removable cell index {j} out of range "
                             f"(have {len(cells)})")
        row = cells[j].row
        parts = list(self.parts)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop(row - 1)
        return Partition(parts)

    def hook_dimension(self) -> int:
        """n! over the product of hook lengths (dimension of V_lambda)."""
        dual = self.dual().parts
        num = factorial(self.n)
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                num //= part - j + dual[j - 1] - i + 1
        return num


EMPTY = Partition(())


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (EMPTY,)
    out = []

    def descend(remaining, limit, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(limit, remaining), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(n, n, ())
    return tuple(out)


def jordan_type_from_ranks(ranks, n: int) -> Partition:
    """Jordan type of an n-dim nilpotent matrix from its power ranks.

    Block size i appears with multiplicity r_{i-1} - 2 r_i + r_{i+1},
    where r_0 = n and ranks beyond the given sequence are zero.
    """
    rs = [n] + [int(r) for r in ranks]
    rs += [0] * (n + 2 - len(rs))

    def r(i):
        return rs[i] if i < len(rs) else 0

    parts = []
    total = 0
    for size in range(1, n + 1):
        mult = r(size - 1) - 2 * r(size) + r(size + 1)
        if mult < 0:
            raise InvalidRankSequence(
                f"multiplicity of block size {size} is {mult} for ranks {tuple(ranks)}")
        parts.extend([size] * mult)
        total += size * mult
    if total != n:
        raise InvalidRankSequence(
            f"block sizes sum to {total}, expected {n}, for ranks {tuple(ranks)}")
    return Partition(sorted(parts, reverse=True))
