"""
HodgeDiamond and BettiTable — the shared result contract of the complete
intersection and cyclic cover modules. Both routes produce one of these,
and every cross-check compares them.

A level of None stands for an empty Hodge structure (H^k = 0).
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConsistencyError

EMPTY = None


@dataclass(frozen=True)
class HodgeDiamond:
    dim: int
    h: tuple[tuple[int, ...], ...]   # h[p][q] = h^{p,q}

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dim}")
        if len(self.h) != self.dim + 1 or any(len(row) != self.dim + 1 for row in self.h):
            raise ValueError(f"expected a {self.dim + 1}x{self.dim + 1} table of Hodge numbers")
        if any(x < 0 for row in self.h for x in row):
            raise ValueError("Hodge numbers must be non-negative")

    @classmethod
    def from_middle_row(cls, dim: int, middle: Sequence[int]) -> "HodgeDiamond":
        """
        Diamond with h^{p,p}=1 off the middle degree and the given middle row,
        listed as (h^{dim,0}, h^{dim-1,1}, ..., h^{0,dim}).
        """
        if len(middle) != dim + 1:
            raise ValueError(f"middle row needs {dim + 1} entries, got {len(middle)}")
        table = [[1 if p == q else 0 for q in range(dim + 1)] for p in range(dim + 1)]
        for q, value in enumerate(middle):
            table[dim - q][q] = int(value)
        return cls(dim, tuple(tuple(row) for row in table))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if 0 <= p <= self.dim and 0 <= q <= self.dim:
            return self.h[p][q]
        return 0

    # ------------------------------------------------------------------
    # Derived views
    # ------------------------------------------------------------------

    def middle_row(self) -> tuple[int, ...]:
        """(h^{n,0}, h^{n-1,1}, ..., h^{0,n})."""
        return tuple(self.h[self.dim - q][q] for q in range(self.dim + 1))

    def betti(self) -> tuple[int, ...]:
        return tuple(
            sum(self[p, k - p] for p in range(k + 1)) for k in range(2 * self.dim + 1)
        )

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))

    def level(self) -> Optional[int]:
        """Largest level over all non-empty degrees."""
        levels = [hodge_level(self, k) for k in range(2 * self.dim + 1)]
        levels = [lv for lv in levels if lv is not EMPTY]
        return max(levels) if levels else EMPTY

    # ------------------------------------------------------------------
    # Invariants
    # ------------------------------------------------------------------

    def is_hodge_symmetric(self) -> bool:
        return all(self[p, q] == self[q, p] for p in range(self.dim + 1) for q in range(self.dim + 1))

    def is_serre_symmetric(self) -> bool:
        n = self.dim
        return all(self[p, q] == self[n - p, n - q] for p in range(n + 1) for q in range(n + 1))

    def has_lefschetz_shape(self) -> bool:
        """h^{p,q} = [p=q] away from the middle degree."""
        n = self.dim
        return all(
            self[p, q] == (1 if p == q else 0)
            for p in range(n + 1)
            for q in range(n + 1)
            if p + q != n
        )

    def validate(self, lefschetz: bool = True) -> "HodgeDiamond":
        if not self.is_hodge_symmetric():
            raise ConsistencyError(f"Hodge symmetry fails for {self.h}")
        if not self.is_serre_symmetric():
            raise ConsistencyError(f"Serre symmetry fails for {self.h}")
        if lefschetz and not self.has_lefschetz_shape():
            raise ConsistencyError(f"off-middle Hodge numbers are not those of P^{self.dim}: {self.h}")
        return self

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "h": [list(row) for row in self.h],
            "middle_row": list(self.middle_row()),
            "betti": list(self.betti()),
        }


@dataclass(frozen=True)
class BettiTable:
    b: tuple[int, ...]

    @property
    def dim(self) -> int:
        return (len(self.b) - 1) // 2

    def euler(self) -> int:
        return sum((-1) ** k * x for k, x in enumerate(self.b))

    def is_palindromic(self) -> bool:
        return self.b == tuple(reversed(self.b))

    def to_list(self) -> list[int]:
        return list(self.b)


def hodge_level(diamond: HodgeDiamond, k: int) -> Optional[int]:
    """max |p-q| over nonzero h^{p,q} with p+q=k, or EMPTY when H^k = 0."""
    if k < 0 or k > 2 * diamond.dim:
        raise ValueError(f"degree {k} outside 0..{2 * diamond.dim}")
    widths = [abs(2 * p - k) for p in range(k + 1) if diamond[p, k - p] != 0]
    return max(widths) if widths else EMPTY


def jacobian_dimension(diamond: HodgeDiamond, i: int) -> int:
    """
    Dimension of the intermediate Jacobian J^{2i-1}: the sum of h^{p,2i-1-p}
    over p >= i, which Hodge symmetry forces to be half of b_{2i-1}.
    """
    if i < 1 or i > diamond.dim:
        raise ValueError(f"Jacobian index must satisfy 1 <= i <= {diamond.dim}, got {i}")
    k = 2 * i - 1
    upper_half = sum(diamond[p, k - p] for p in range(i, k + 1))
    betti = diamond.betti()[k]
    if 2 * upper_half != betti:
        raise ConsistencyError(f"J^{k}: half-sum {upper_half} is not b_{k}/2 = {betti}/2")
    return upper_half
