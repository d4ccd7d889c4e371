"""
ConsistencyReport — the contract every cross-check produces.

A report holds one value per computation route, plus an optional published
value with its citation. Routes must agree (otherwise something in hodgekit is
wrong); the published value may legitimately differ and is only reported.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import ConsistencyError


@dataclass(frozen=True)
class ConsistencyReport:
    quantity: str
    route_values: dict[str, int] = field(default_factory=dict)
    claim: Optional[int] = None
    citation: Optional[str] = None

    @property
    def agree(self) -> bool:
        return len(set(self.route_values.values())) <= 1

    @property
    def value(self) -> Optional[int]:
        """The agreed value, or None while the routes disagree."""
        if not self.route_values or not self.agree:
            return None
        return next(iter(self.route_values.values()))

    @property
    def matches_claim(self) -> Optional[bool]:
        if self.claim is None:
            return None
        return self.agree and self.value == self.claim


    def require_agreement(self, context: str = "") -> "ConsistencyReport":
        if not self.agree:
            where = f"{context}: " if context else ""
            raise ConsistencyError(
                f"{where}routes disagree on {self.quantity}: {self.route_values}", report=self
            )
        return self

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "routes": dict(sorted(self.route_values.items())),
            "agree": self.agree,
            "claim": self.claim,
            "citation": self.citation,
            "matches_claim": self.matches_claim,
        }
