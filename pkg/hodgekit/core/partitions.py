"""
Integer partitions and the bounded boxes that index Schubert classes.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]
    # (rows, cols) when the partition is known to live in a box; not part of identity
    box: Optional[tuple[int, int]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)
        if self.box is not None and not self.fits(*self.box):
            raise ValueError(f"{parts} does not fit in a {self.box[0]}x{self.box[1]} box")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """0-based part lookup, zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def fits(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def padded(self, rows: int) -> tuple[int, ...]:
        return tuple(self.part(i) for i in range(rows))

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def complement(lam: Partition, rows: int, cols: int) -> Partition:
    """Complement of `lam` inside the rows x cols box (Poincaré dual index)."""
    if not lam.fits(rows, cols):
        raise ValueError(f"{lam} does not fit in a {rows}x{cols} box")
    padded = lam.padded(rows)
    return Partition(tuple(cols - padded[rows - 1 - i] for i in range(rows)), box=(rows, cols))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """
    All partitions with at most `rows` parts, each at most `cols`.

    Enumerated through lattice paths: choosing which `rows` of the
    rows+cols steps go up gives C(rows+cols, rows) partitions. The result
    is sorted by size, then reverse-lexicographically.
    """
    if rows < 0 or cols < 0:
        raise ValueError(f"box dimensions must be >= 0, got {rows}x{cols}")
    out = []
    for ups in combinations(range(rows + cols), rows):
        # the i-th up step (from the top row down) happens after ups[i] - i right steps
        parts = tuple(sorted((ups[i] - i for i in range(rows)), reverse=True))
        out.append(Partition(parts, box=(rows, cols)))
    out.sort(key=lambda p: (p.size, tuple(-x for x in p.parts)))
    return out
