"""Relation tables and the normal-ordering engine for the four algebra presets.

Each preset pairs a basis of the momentum sector (bicrossproduct or standard)
with a sector (Poincare: rotations, boosts, momenta; phase space: positions,
momenta).  A preset's table maps every out-of-order adjacent generator pair
(hi, lo) to the correction E in  hi*lo = lo*hi + E.  All hyperbolic functions
of P0 are pre-expanded in the group-like q = exp(P0 / 2 kappa c):

    sinh(P0/kc)  = (q^2 - q^-2)/2
    cosh(P0/kc)  = (q^2 + q^-2)/2
    sinh(P0/2kc) = (q - q^-1)/2

q itself commutes with everything except x0 and the boosts:

    q^a x0  = x0 q^a + a*(i hbar / 2 kappa c) q^a
    q^a N_i = N_i q^a - a*(i / 2 kappa c) P_i q^a

Rewriting picks the leftmost out-of-order adjacent pair and repeats to a
fixpoint.  The tables are PBW-like; termination and confluence are certified
empirically by the Jacobi and associativity suites rather than proven.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .elements import (
    BOOSTS,
    Gen,
    Monomial,
    ROTATIONS,
    SPATIAL_P,
    SPATIAL_X,
    Element,
)
from .errors import NonTerminationError, SectorError
from .scalars import Scalar

HALF = Fraction(1, 2)


class Basis(str, Enum):
    BICROSS = "bicross"
    STANDARD = "standard"


class Sector(str, Enum):
    POINCARE = "poincare"
    PHASESPACE = "phasespace"


def _eps(i: int, j: int, k: int) -> int:
    """Levi-Civita symbol on indices 1..3."""
    return (i - j) * (j - k) * (k - i) // 2


def _eps_sum(i: int, j: int, family, coeff: Scalar) -> Element:
    """coeff * eps_{i j k} family[k], summed over k."""
    out = Element.zero()
    for k in (1, 2, 3):
        e = _eps(i, j, k)
        if e:
            s = coeff if e > 0 else -coeff
            out = out + Element.term(Monomial((family[k - 1],)), s)
    return out


# -- relation tables ---------------------------------------------------------


def _lorentz_rules(basis: Basis) -> dict:
    """Rotation and boost sector: classical except [N,N] in the standard basis."""
    i_ = Scalar.i()
    rules = {}
    # [M_b, M_a] = i eps_{b a k} M_k
    for b in (2, 3):
        for a in range(1, b):
            rules[(ROTATIONS[b - 1], ROTATIONS[a - 1])] = _eps_sum(b, a, ROTATIONS, i_)
    # [N_j, M_i] = i eps_{j i k} N_k   (from [M_i, N_j] = i eps_{i j k} N_k)
    for j in (1, 2, 3):
        for i in (1, 2, 3):
            rules[(BOOSTS[j - 1], ROTATIONS[i - 1])] = _eps_sum(j, i, BOOSTS, i_)
    # boosts among themselves
    for b in (2, 3):
        for a in range(1, b):
            if basis is Basis.BICROSS:
                # classical Lorentz: [N_b, N_a] = -i eps_{b a k} M_k
                rules[(BOOSTS[b - 1], BOOSTS[a - 1])] = _eps_sum(b, a, ROTATIONS, -i_)
            else:
                # [N_b, N_a] = -i eps_{b a k} (M_k cosh(P0/kc)
                #                              - P_k P_l M_l / 4(kappa c)^2)
                entry = Element.zero()
                for k in (1, 2, 3):
                    e = _eps(b, a, k)
                    if not e:
                        continue
                    cosh_c = Scalar.term(0, -Fraction(e, 2))
                    entry = entry + Element(
                        {
                            Monomial((ROTATIONS[k - 1],), 2): cosh_c,
                            Monomial((ROTATIONS[k - 1],), -2): cosh_c,
                        }
                    )
                    ppm_c = Scalar.term(0, Fraction(e, 4), kappa=-2, c=-2)
                    for l in (1, 2, 3):
                        # word kept in written order: the engine normalizes it
                        word = (SPATIAL_P[k - 1], SPATIAL_P[l - 1], ROTATIONS[l - 1])
                        entry = entry + Element.term(Monomial(word), ppm_c)
                rules[(BOOSTS[b - 1], BOOSTS[a - 1])] = entry
    return rules


def _momentum_lorentz_rules(basis: Basis) -> dict:
    i_ = Scalar.i()
    rules = {}
    # [P0, M_i] = 0 ; [P_j, M_i] = -i eps_{i j k} P_k
    for i in (1, 2, 3):
        rules[(Gen.P0, ROTATIONS[i - 1])] = Element.zero()
        for j in (1, 2, 3):
            rules[(SPATIAL_P[j - 1], ROTATIONS[i - 1])] = _eps_sum(
                i, j, SPATIAL_P, -i_
            )
    # [P0, N_i] = -i P_i
    for i in (1, 2, 3):
        rules[(Gen.P0, BOOSTS[i - 1])] = Element.term(
            Monomial((SPATIAL_P[i - 1],)), -i_
        )
    # [P_j, N_i] = -[N_i, P_j]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            entry = Element.zero()
            if i == j:
                if basis is Basis.BICROSS:
                    # [N_i, P_i] = i [ kc sinh(P0/kc) e^{-P0/kc} + P^2 / 2kc ]
                    #            = i [ kc (1 - q^-4)/2 + P^2 / 2kc ]
                    half_kc = Scalar.term(0, -HALF, kappa=1, c=1)
                    entry = entry + Element(
                        {
                            Monomial(): half_kc,
                            Monomial((), -4): -half_kc,
                        }
                    )
                    inv_2kc = Scalar.term(0, -HALF, kappa=-1, c=-1)
                    for m in (1, 2, 3):
                        entry = entry + Element.term(
                            Monomial((SPATIAL_P[m - 1], SPATIAL_P[m - 1])), inv_2kc
                        )
                else:
                    # [N_i, P_i] = i kc sinh(P0/kc) = i kc (q^2 - q^-2)/2
                    half_kc = Scalar.term(0, -HALF, kappa=1, c=1)
                    entry = entry + Element(
                        {
                            Monomial((), 2): half_kc,
                            Monomial((), -2): -half_kc,
                        }
                    )
            if basis is Basis.BICROSS:
                # -(-i/kc) P_i P_j from the bicross boost-momentum relation
                word = tuple(sorted((SPATIAL_P[i - 1], SPATIAL_P[j - 1])))
                entry = entry + Element.term(
                    Monomial(word), Scalar.term(0, 1, kappa=-1, c=-1)
                )
            rules[(SPATIAL_P[j - 1], BOOSTS[i - 1])] = entry
    return rules


def _momentum_rules() -> dict:
    rules = {}
    ps = (Gen.P0, Gen.P1, Gen.P2, Gen.P3)
    for b in range(1, 4):
        for a in range(b):
            rules[(ps[b], ps[a])] = Element.zero()
    return rules


def _position_rules() -> dict:
    """kappa-Minkowski space: [x0, x_k] = -(i hbar / kappa c) x_k."""
    rules = {}
    for k in (1, 2, 3):
        rules[(SPATIAL_X[k - 1], Gen.X0)] = Element.term(
            Monomial((SPATIAL_X[k - 1],)), Scalar.term(0, 1, hbar=1, kappa=-1, c=-1)
        )
    for b in (2, 3):
        for a in range(1, b):
            rules[(SPATIAL_X[b - 1], SPATIAL_X[a - 1])] = Element.zero()
    return rules


def _phase_rules(basis: Basis) -> dict:
    """Cross relations between positions and momenta, per basis."""
    ih = Scalar.term(0, 1, hbar=1)
    rules = {}
    # [P0, x0] = i hbar ; [P0, x_k] = 0
    rules[(Gen.P0, Gen.X0)] = Element.from_scalar(ih)
    for k in (1, 2, 3):
        rules[(Gen.P0, SPATIAL_X[k - 1])] = Element.zero()
    for k in (1, 2, 3):
        # [P_k, x0] = -[x0, p_k]
        denom = 1 if basis is Basis.BICROSS else 2
        rules[(SPATIAL_P[k - 1], Gen.X0)] = Element.term(
            Monomial((SPATIAL_P[k - 1],)),
            Scalar.term(0, -Fraction(1, denom), hbar=1, kappa=-1, c=-1),
        )
        for l in (1, 2, 3):
            if k != l:
                rules[(SPATIAL_P[k - 1], SPATIAL_X[l - 1])] = Element.zero()
            elif basis is Basis.BICROSS:
                # [x_k, p_k] = i hbar
                rules[(SPATIAL_P[k - 1], SPATIAL_X[l - 1])] = Element.from_scalar(-ih)
            else:
                # [x_k, p_k] = i hbar q
                rules[(SPATIAL_P[k - 1], SPATIAL_X[l - 1])] = Element.term(
                    Monomial((), 1), -ih
                )
    return rules


def _q_rules(sector: Sector) -> dict[Gen, tuple[Scalar, tuple[Gen, ...]]]:
    """Per-generator data (lam, extra) with q^a g = g q^a + a*lam*extra*q^a."""
    if sector is Sector.POINCARE:
        return {
            BOOSTS[i - 1]: (
                Scalar.term(0, -HALF, kappa=-1, c=-1),
                (SPATIAL_P[i - 1],),
            )
            for i in (1, 2, 3)
        }
    return {Gen.X0: (Scalar.term(0, HALF, hbar=1, kappa=-1, c=-1), ())}


# -- preset ------------------------------------------------------------------

DEFAULT_STEP_CAP = 10**6


class AlgebraPreset:
    """One basis/sector choice with its rewrite table and memoized engine."""

    def __init__(self, basis: Basis, sector: Sector, rules, qrules, step_cap=DEFAULT_STEP_CAP):
        self.basis = basis
        self.sector = sector
        self.rules = rules
        self.qrules = qrules
        self.step_cap = step_cap
        if sector is Sector.POINCARE:
            self.generators = ROTATIONS + BOOSTS + (Gen.P0,) + SPATIAL_P
        else:
            self.generators = (Gen.X0,) + SPATIAL_X + (Gen.P0,) + SPATIAL_P
        self.allowed = frozenset(self.generators)
        self._nf_cache: dict[Monomial, Element] = {}
        self._qpast_cache: dict = {}
        self._steps = 0

    def __repr__(self) -> str:
        return f"AlgebraPreset({self.basis.value}, {self.sector.value})"

    def with_rule_override(self, pair, element: Element) -> "AlgebraPreset":
        """Copy with one table entry replaced (fresh caches); for diagnostics."""
        if pair not in self.rules:
            raise KeyError(f"no rule for pair {pair}")
        rules = dict(self.rules)
        rules[pair] = element
        return AlgebraPreset(self.basis, self.sector, rules, self.qrules, self.step_cap)

    # -- admissibility -------------------------------------------------------

    def check_admissible(self, e: Element):
        for mono in e.monomials():
            for g in mono.word:
                if g not in self.allowed:
                    raise SectorError(
                        f"generator {g.render()} is not admissible in the "
                        f"{self.sector.value} sector"
                    )

    # -- q transport ---------------------------------------------------------

    def _q_past_word(self, a: int, word: tuple[Gen, ...]):
        """Rewrite q^a * word as sum of coeff * word' * q^a."""
        if a == 0 or not word:
            return ((word, Scalar.one()),)
        key = (a, word)
        cached = self._qpast_cache.get(key)
        if cached is not None:
            return cached
        g, rest = word[0], word[1:]
        tail = self._q_past_word(a, rest)
        out = [((g,) + w, s) for w, s in tail]
        qrule = self.qrules.get(g)
        if qrule is not None:
            lam, extra = qrule
            factor = lam * Scalar.rational(a)
            out.extend((extra + w, s * factor) for w, s in tail)
        result = tuple(out)
        self._qpast_cache[key] = result
        return result

    # -- rewriting -----------------------------------------------------------

    def _descent(self, word: tuple[Gen, ...]):
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                return i
        return None

    def _nf_monomial(self, mono: Monomial) -> Element:
        cached = self._nf_cache.get(mono)
        if cached is not None:
            if cached is _IN_PROGRESS:
                raise NonTerminationError(mono, self._steps)
            return cached
        word = mono.word
        i = self._descent(word)
        if i is None:
            result = Element.term(mono, Scalar.one())
            self._nf_cache[mono] = result
            return result
        self._nf_cache[mono] = _IN_PROGRESS
        try:
            self._steps += 1
            if self._steps > self.step_cap:
                raise NonTerminationError(mono, self._steps)
            hi, lo = word[i], word[i + 1]
            left, right = word[:i], word[i + 2 :]
            rule = self.rules.get((hi, lo))
            if rule is None:
                raise SectorError(
                    f"no rewrite rule for pair ({hi.render()}, {lo.render()}) in "
                    f"the {self.sector.value} sector"
                )
            acc: dict[Monomial, Scalar] = {}
            swapped = Monomial(left + (lo, hi) + right, mono.qexp)
            _accumulate(acc, self._nf_monomial(swapped), Scalar.one())
            for cmono, ccoeff in rule.items():
                # splice: left * cmono.word * q^cmono.qexp * right * q^mono.qexp
                for rword, rcoeff in self._q_past_word(cmono.qexp, right):
                    spliced = Monomial(
                        left + cmono.word + rword, mono.qexp + cmono.qexp
                    )
                    _accumulate(acc, self._nf_monomial(spliced), ccoeff * rcoeff)
            result = Element(acc)
        except Exception:
            self._nf_cache.pop(mono, None)
            raise
        self._nf_cache[mono] = result
        return result

    def normal_form(self, e: Element) -> Element:
        self.check_admissible(e)
        self._steps = 0
        acc: dict[Monomial, Scalar] = {}
        for mono, coeff in e.items():
            _accumulate(acc, self._nf_monomial(mono), coeff)
        return Element(acc)

    def multiply(self, a: Element, b: Element) -> Element:
        self.check_admissible(a)
        self.check_admissible(b)
        self._steps = 0
        acc: dict[Monomial, Scalar] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c12 = c1 * c2
                for word2, qc in self._q_past_word(m1.qexp, m2.word):
                    raw = Monomial(m1.word + word2, m1.qexp + m2.qexp)
                    _accumulate(acc, self._nf_monomial(raw), c12 * qc)
        return Element(acc)

    def multiply_all(self, *factors: Element) -> Element:
        out = Element.one()
        for f in factors:
            out = self.multiply(out, f)
        return out

    def commutator(self, a: Element, b: Element) -> Element:
        return self.multiply(a, b) - self.multiply(b, a)


class _InProgress:
    def items(self):  # pragma: no cover - never reached
        raise AssertionError


_IN_PROGRESS = _InProgress()


def _accumulate(acc: dict, element: Element, factor: Scalar):
    if factor.is_zero:
        return
    for mono, coeff in element.items():
        term = coeff * factor
        prev = acc.get(mono)
        acc[mono] = term if prev is None else prev + term


@lru_cache(maxsize=None)
def get_preset(basis: Basis, sector: Sector) -> AlgebraPreset:
    """Shared preset instances (warm rewrite caches across callers)."""
    basis = Basis(basis)
    sector = Sector(sector)
    if sector is Sector.POINCARE:
        rules = {}
        rules.update(_lorentz_rules(basis))
        rules.update(_momentum_lorentz_rules(basis))
        rules.update(_momentum_rules())
    else:
        rules = {}
        rules.update(_position_rules())
        rules.update(_phase_rules(basis))
        rules.update(_momentum_rules())
    return AlgebraPreset(basis, sector, rules, _q_rules(sector))


# -- free-function wrappers over the preset methods -----------------------------


def normal_form(e: Element, preset: AlgebraPreset) -> Element:
    return preset.normal_form(e)


def multiply(a: Element, b: Element, preset: AlgebraPreset) -> Element:
    return preset.multiply(a, b)


def commutator(a: Element, b: Element, preset: AlgebraPreset) -> Element:
    return preset.commutator(a, b)


def classical_limit(e: Element) -> Element:
    """Model kappa -> infinity: send q^n -> 1, then drop kappa^-1 terms."""
    acc: dict[Monomial, Scalar] = {}
    for mono, coeff in e.items():
        kept = Scalar(
            {triple: g for triple, g in coeff.items() if triple[1] >= 0}
        )
        if kept.is_zero:
            continue
        flat = Monomial(mono.word, 0)
        prev = acc.get(flat)
        acc[flat] = kept if prev is None else prev + kept
    return Element(acc)
