"""
Published values that hodgekit compares its own results against.

Each entry names the object, the quantity and the value quoted in the
literature, plus a short citation phrase so a mismatch warning can point at
the exact sentence. The table is versioned: bump CLAIMS_VERSION whenever an
entry changes, since reports echo it.

These are never ground truth. Route agreement decides correctness; a claim
only ever produces a warning.
"""

from dataclasses import dataclass
from typing import Optional

CLAIMS_VERSION = 1


@dataclass(frozen=True)
class PublishedClaim:
    kind: str                 # "ci" or "cover"
    key: tuple                # (dim, degrees) or (n, m, b)
    quantity: str             # "middle_betti", "jacobian_dimension", "level"
    value: int
    citation: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "key": [list(k) if isinstance(k, tuple) else k for k in self.key],
            "quantity": self.quantity,
            "value": self.value,
            "citation": self.citation,
        }


_DOUBLE_QUARTIC_FIVEFOLD = (5, 2, 4)

_FIXED = [
    PublishedClaim("cover", _DOUBLE_QUARTIC_FIVEFOLD, "middle_betti", 284,
                   "double quartic fivefold lemma: 'H^5 ... Z^{(+)284}'"),
    PublishedClaim("cover", _DOUBLE_QUARTIC_FIVEFOLD, "jacobian_dimension", 142,
                   "double quartic fivefold lemma: 'principally polarized abelian variety of dimension 142'"),
    PublishedClaim("cover", _DOUBLE_QUARTIC_FIVEFOLD, "level", 1,
                   "double quartic fivefold lemma: 'Fano fivefold of Hodge level 1'"),
    PublishedClaim("cover", (5, 3, 3), "jacobian_dimension", 21,
                   "introduction: '21-dimensional principally polarised abelian variety' (cubic fivefold)"),
    PublishedClaim("ci", (3, (3,)), "jacobian_dimension", 5,
                   "introduction: 'dimension 5, 20 and 30' (cubic threefold)"),
    PublishedClaim("ci", (3, (2, 3)), "jacobian_dimension", 20,
                   "introduction: 'dimension 5, 20 and 30' ((2,3) threefold)"),
    PublishedClaim("ci", (3, (4,)), "jacobian_dimension", 30,
                   "introduction: 'dimension 5, 20 and 30' (quartic threefold)"),
    PublishedClaim("ci", (5, (3,)), "jacobian_dimension", 21,
                   "introduction: '21-dimensional principally polarised abelian variety'"),
    PublishedClaim("ci", (5, (2, 2, 2)), "jacobian_dimension", 27,
                   "introduction: 'Prym variety of a double cover' (three quadrics in P^8)"),
]

# intersections of two quadrics in P^{2m+3}: 'hyperelliptic curve of genus m+1'
_TWO_QUADRICS = [
    PublishedClaim("ci", (2 * m + 1, (2, 2)), "jacobian_dimension", m + 1,
                   f"introduction: 'hyperelliptic curve of genus m+1' (m={m})")
    for m in range(1, 16)
]

CLAIMS: dict[tuple, PublishedClaim] = {
    (c.kind, c.key, c.quantity): c for c in _FIXED + _TWO_QUADRICS
}


def lookup(kind: str, key: tuple, quantity: str) -> Optional[PublishedClaim]:
    return CLAIMS.get((kind, key, quantity))
