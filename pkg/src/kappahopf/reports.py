"""Serializable result records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    subject: str
    passed: bool
    residual: str = "0"

    def to_dict(self):
        return {
            "subject": self.subject,
            "pass": self.passed,
            "residual_rendering": self.residual,
        }


@dataclass
class CheckReport:
    preset: str
    axiom: str
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def to_dict(self):
        return {
            "preset": self.preset,
            "axiom": self.axiom,
            "pass": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass
class DerivationEntry:
    pair: str
    derived: str
    table: str
    match: bool

    def to_dict(self):
        return {
            "pair": self.pair,
            "derived_rendering": self.derived,
            "table_rendering": self.table,
            "match": self.match,
        }


@dataclass
class DerivationReport:
    basis: str
    convention: str
    entries: list[DerivationEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.match for e in self.entries)

    def failures(self) -> list[DerivationEntry]:
        return [e for e in self.entries if not e.match]

    def to_dict(self):
        return {
            "basis": self.basis,
            "convention": self.convention,
            "pass": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass
class BasisMapCandidate:
    direction: str
    sign: int
    intertwines: bool
    intertwines_flipped: bool
    counit_compatible: bool
    residuals: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "direction": self.direction,
            "sign": self.sign,
            "intertwines": self.intertwines,
            "intertwines_flipped": self.intertwines_flipped,
            "counit_compatible": self.counit_compatible,
            "residuals": self.residuals,
        }


@dataclass
class BasisMapReport:
    candidates: list[BasisMapCandidate]

    @property
    def passing(self) -> list[BasisMapCandidate]:
        return [c for c in self.candidates if c.intertwines]

    @property
    def transformations(self) -> list[BasisMapCandidate]:
        """Passing candidates with mutually inverse directions deduplicated.

        A coalgebra isomorphism and its inverse always pass together, so the
        passing list is collapsed to one representative per bijection, keeping
        the standard->bicross orientation.
        """
        out = []
        seen = set()
        for c in self.passing:
            key = frozenset({(c.direction, c.sign), _inverse_key(c)})
            if key in seen:
                continue
            seen.add(key)
            preferred = c
            if c.direction != "standard->bicross":
                inv_dir, inv_sign = _inverse_key(c)
                for other in self.passing:
                    if (other.direction, other.sign) == (inv_dir, inv_sign):
                        preferred = other
                        break
            out.append(preferred)
        return out

    @property
    def named(self) -> str | None:
        t = self.transformations
        if len(t) != 1:
            return None
        c = t[0]
        arrow = "P_i -> P_i q" if c.sign == 1 else "P_i -> P_i q^-1"
        return f"{c.direction} with {arrow}"

    def to_dict(self):
        return {
            "candidates": [c.to_dict() for c in self.candidates],
            "transformations": [c.to_dict() for c in self.transformations],
            "named": self.named,
        }


def _inverse_key(c: BasisMapCandidate):
    a, b = c.direction.split("->")
    return (f"{b}->{a}", -c.sign)
