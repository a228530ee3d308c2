"""Exact coefficient ring: Gaussian rationals times signed powers of hbar, kappa, c.

Every coefficient appearing in the deformed commutation relations lies in
Q(i) * hbar^a kappa^b c^d, so the ring is kept exact: rationals via
`fractions.Fraction`, the imaginary unit as an explicit component, and the
three physical constants as a signed exponent triple.  No floating point
enters until `Scalar.to_complex` bridges into the numeric module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i): re + im*i with exact rational parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re=0, im=0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


G_ZERO = GaussianRational(_ZERO, _ZERO)
G_ONE = GaussianRational(_ONE, _ZERO)
G_I = GaussianRational(_ZERO, _ONE)

# exponent triple: (e_hbar, e_kappa, e_c)
Triple = tuple[int, int, int]


class Scalar:
    """Finite sum of Gaussian-rational multiples of hbar^a kappa^b c^d.

    Canonical form: at most one addend per exponent triple, no zero addends.
    Values are immutable; all operations return fresh instances.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Triple, GaussianRational] | None = None):
        canonical: dict[Triple, GaussianRational] = {}
        if terms:
            for triple, coeff in terms.items():
                if not coeff.is_zero:
                    canonical[triple] = coeff
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return Scalar()

    @staticmethod
    def one() -> "Scalar":
        return Scalar({(0, 0, 0): G_ONE})

    @staticmethod
    def i() -> "Scalar":
        return Scalar({(0, 0, 0): G_I})

    @staticmethod
    def rational(num, den=1) -> "Scalar":
        return Scalar({(0, 0, 0): GaussianRational.of(Fraction(num, den))})

    @staticmethod
    def gaussian(re=0, im=0) -> "Scalar":
        return Scalar({(0, 0, 0): GaussianRational.of(re, im)})

    @staticmethod
    def term(re=0, im=0, *, hbar=0, kappa=0, c=0) -> "Scalar":
        """Single addend (re + im*i) * hbar^hbar kappa^kappa c^c."""
        return Scalar({(hbar, kappa, c): GaussianRational.of(re, im)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        terms = dict(self._terms)
        for triple, coeff in other._terms.items():
            acc = terms.get(triple)
            terms[triple] = coeff if acc is None else acc + coeff
        return Scalar(terms)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar({t: -c for t, c in self._terms.items()})

    def __mul__(self, other: "Scalar") -> "Scalar":
        terms: dict[Triple, GaussianRational] = {}
        for (a1, b1, c1), g1 in self._terms.items():
            for (a2, b2, c2), g2 in other._terms.items():
                triple = (a1 + a2, b1 + b2, c1 + c2)
                prod = g1 * g2
                acc = terms.get(triple)
                terms[triple] = prod if acc is None else acc + prod
        return Scalar(terms)

    def inverse(self) -> "Scalar":
        """Inverse of a single-addend scalar; sums are not invertible here."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(
                "only single-term scalars are invertible (got "
                f"{len(self._terms)} terms)"
            )
        ((eh, ek, ec), g), = self._terms.items()
        return Scalar({(-eh, -ek, -ec): g.inverse()})

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"Scalar({self.render()})"

    # -- numeric bridge ----------------------------------------------------

    def to_complex(self, hbar: float, kappa: float, c: float) -> complex:
        """Substitute positive real values for the constants.

        The exact rational parts are converted to float last, after the
        power product, to keep rounding to a single step per addend.
        """
        for name, value in (("hbar", hbar), ("kappa", kappa), ("c", c)):
            if not value > 0:
                raise ParameterError(f"{name} must be strictly positive, got {value}")
        total = 0j
        for (eh, ek, ec), g in sorted(self._terms.items()):
            mag = hbar**eh * kappa**ek * c**ec
            total += complex(float(g.re) * mag, float(g.im) * mag)
        return total

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, parseable by the expression grammar."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for triple, g in sorted(self._terms.items()):
            for piece in _gauss_pieces(g, _powers_str(triple)):
                parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def render_single(self) -> str:
        """Render wrapped for use as a coefficient in front of a monomial."""
        body = self.render()
        return f"({body})"

    @property
    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): G_ONE}


def _powers_str(triple: Triple) -> str:
    names = ("hbar", "kappa", "c")
    parts = []
    for name, e in zip(names, triple):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def _rat_str(f: Fraction) -> str:
    return str(f)  # Fraction renders as "p/q" or "p"


def _gauss_pieces(g: GaussianRational, powers: str) -> list[str]:
    """Split a Gaussian coefficient into real and imaginary product strings."""
    pieces = []
    if g.re != 0:
        pieces.append(_product_str(g.re, False, powers))
    if g.im != 0:
        pieces.append(_product_str(g.im, True, powers))
    return pieces


def _product_str(f: Fraction, imaginary: bool, powers: str) -> str:
    sign = "-" if f < 0 else ""
    mag = -f if f < 0 else f
    factors = []
    if mag != 1 or (not imaginary and not powers):
        factors.append(_rat_str(mag))
    if imaginary:
        factors.append("i")
    if powers:
        factors.append(powers)
    return sign + " ".join(factors)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_to_complex(a: Scalar, hbar: float, kappa: float, c: float) -> complex:
    return a.to_complex(hbar, kappa, c)
