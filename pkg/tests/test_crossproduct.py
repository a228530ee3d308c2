"""Duality pairing, left action, cross product, derivation, basis map."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kappahopf.crossproduct import (
    Convention,
    PairingContext,
    basis_map_check,
    canonical_limit_table,
    check_module_algebra_law,
    check_pairing_well_defined,
    check_representation_law,
    cross_multiply,
    derive_phase_space_relations,
    derived_relation_elements,
    left_action,
    pair,
    select_convention,
)
from kappahopf.elements import Gen, Monomial, Element
from kappahopf.errors import PairingError
from kappahopf.presets import Basis, classical_limit
from kappahopf.scalars import Scalar

CTX_B = PairingContext(Basis.BICROSS)
CTX_S = PairingContext(Basis.STANDARD)


def gen(g):
    return Element.generator(g)


def sc(re=0, im=0, **kw):
    return Scalar.term(re, im, **kw)


class TestPairing:
    def test_metric_values(self):
        assert pair(gen(Gen.P1), gen(Gen.X1), CTX_B) == sc(0, -1, hbar=1)
        assert pair(gen(Gen.P0), gen(Gen.X0), CTX_B) == sc(0, 1, hbar=1)
        assert pair(gen(Gen.P1), gen(Gen.X2), CTX_B).is_zero
        assert pair(gen(Gen.P0), gen(Gen.X1), CTX_B).is_zero

    def test_q_power_pairing(self):
        assert pair(Element.q_power(-2), gen(Gen.X0), CTX_B) == sc(
            0, -1, hbar=1, kappa=-1, c=-1
        )
        assert pair(Element.q_power(-2), gen(Gen.X1), CTX_B).is_zero

    def test_q_power_pairing_series_oracle(self):
        """Truncate exp(a P0 / 2 kappa c) to fourth order and pair term by
        term; only the linear term survives against a primitive position."""

        def series_pairing(a: int, x: Gen) -> Scalar:
            total = Scalar.zero()
            p0pow = Element.one()
            for n in range(5):
                if n > 0:
                    # multiply by P0 and the scalar a / (2 kappa c) / n
                    p0pow = Element.term(
                        Monomial((Gen.P0,) * n),
                        sc(Fraction(a**n, 2**n * math.factorial(n)), 0, kappa=-n, c=-n),
                    )
                total = total + pair(p0pow, gen(x), CTX_B)
            return total

        for a in (-2, -1, 1, 3):
            assert series_pairing(a, Gen.X0) == pair(
                Element.q_power(a), gen(Gen.X0), CTX_B
            )
            assert series_pairing(a, Gen.X1) == pair(
                Element.q_power(a), gen(Gen.X1), CTX_B
            )

    def test_unit_pairings(self):
        assert pair(Element.one(), gen(Gen.X1), CTX_B).is_zero  # <1, x> = eps(x)
        assert pair(gen(Gen.P1), Element.one(), CTX_B).is_zero  # <p, 1> = eps(p)
        assert pair(Element.one(), Element.one(), CTX_B) == Scalar.one()

    def test_sector_validation(self):
        with pytest.raises(PairingError):
            pair(gen(Gen.X1), gen(Gen.X1), CTX_B)
        with pytest.raises(PairingError):
            pair(gen(Gen.P1), gen(Gen.P1), CTX_B)
        with pytest.raises(PairingError):
            pair(gen(Gen.P1), Element.q_power(1), CTX_B)

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    def test_well_defined_on_relations(self, ctx):
        assert check_pairing_well_defined(ctx)

    def test_right_convention_ill_defined(self):
        for basis in (Basis.BICROSS, Basis.STANDARD):
            ctx = PairingContext(basis, Convention.RIGHT)
            assert not check_pairing_well_defined(ctx)


class TestLeftAction:
    def test_momentum_on_position(self):
        assert left_action(gen(Gen.P1), gen(Gen.X1), CTX_B) == Element.from_scalar(
            sc(0, -1, hbar=1)
        )

    def test_group_like_action(self):
        assert left_action(Element.q_power(-2), gen(Gen.X1), CTX_B) == gen(Gen.X1)
        assert left_action(Element.q_power(-2), gen(Gen.X0), CTX_B) == gen(
            Gen.X0
        ) + Element.from_scalar(sc(0, -1, hbar=1, kappa=-1, c=-1))

    def test_unit_acts_trivially(self):
        x = gen(Gen.X0) + gen(Gen.X2)
        assert left_action(Element.one(), x, CTX_B) == x

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    def test_module_algebra_law(self, ctx):
        assert check_module_algebra_law(ctx)

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    def test_representation_law(self, ctx):
        assert check_representation_law(ctx)


class TestCrossMultiply:
    def test_momentum_times_position(self):
        got = cross_multiply(gen(Gen.P1), gen(Gen.X1), CTX_B)
        expected = Element.from_scalar(sc(0, -1, hbar=1)) + Element.term(
            Monomial((Gen.X1, Gen.P1)), Scalar.one()
        )
        assert got == expected

    def test_trivial_action_branch(self):
        got = cross_multiply(gen(Gen.X0), gen(Gen.P0), CTX_B)
        assert got == Element.term(Monomial((Gen.X0, Gen.P0)), Scalar.one())

    def test_group_like_action_branch(self):
        got = cross_multiply(gen(Gen.P1), gen(Gen.X0), CTX_B)
        expected = Element.term(Monomial((Gen.X0, Gen.P1)), Scalar.one()) + Element.term(
            Monomial((Gen.P1,)), sc(0, -1, hbar=1, kappa=-1, c=-1)
        )
        assert got == expected

    def test_unit_element(self):
        a = gen(Gen.X1) + gen(Gen.P2)
        assert cross_multiply(Element.one(), a, CTX_B) == a
        assert cross_multiply(a, Element.one(), CTX_B) == a

    def test_restriction_to_pure_sectors(self):
        preset = CTX_B.preset
        assert cross_multiply(gen(Gen.X1), gen(Gen.X0), CTX_B) == preset.multiply(
            gen(Gen.X1), gen(Gen.X0)
        )
        assert cross_multiply(gen(Gen.P1), Element.q_power(2), CTX_B) == preset.multiply(
            gen(Gen.P1), Element.q_power(2)
        )

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    def test_associativity_on_mixed_triples(self, ctx):
        triples = [
            (gen(Gen.P1), gen(Gen.X1), gen(Gen.P0)),
            (gen(Gen.X0), gen(Gen.P1), gen(Gen.X1)),
            (Element.q_power(1), gen(Gen.X0), gen(Gen.P2)),
            (gen(Gen.P2), gen(Gen.P1), gen(Gen.X2)),
            (
                gen(Gen.X1) + gen(Gen.P1),
                gen(Gen.X0),
                Element.q_power(-1) + gen(Gen.P3),
            ),
        ]
        for a, b, c in triples:
            lhs = cross_multiply(cross_multiply(a, b, ctx), c, ctx)
            rhs = cross_multiply(a, cross_multiply(b, c, ctx), ctx)
            assert lhs == rhs

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    @settings(max_examples=15, deadline=None)
    @given(data=st.data())
    def test_associativity_randomized(self, ctx, data):
        preset = ctx.preset
        gens = st.sampled_from(preset.generators)
        words = st.lists(gens, max_size=2).map(tuple)
        monos = st.builds(Monomial, words, st.integers(-1, 1))
        coeffs = st.sampled_from([Scalar.one(), Scalar.i(), Scalar.rational(2)])
        elems = st.dictionaries(monos, coeffs, min_size=1, max_size=2).map(Element)
        a = preset.normal_form(data.draw(elems))
        b = preset.normal_form(data.draw(elems))
        c = preset.normal_form(data.draw(elems))
        lhs = cross_multiply(cross_multiply(a, b, ctx), c, ctx)
        rhs = cross_multiply(a, cross_multiply(b, c, ctx), ctx)
        assert lhs == rhs

    def test_normal_order_precondition_enforced(self):
        raw = Element.term(Monomial((Gen.P1, Gen.X1)), Scalar.one())
        with pytest.raises(PairingError):
            cross_multiply(raw, Element.one(), CTX_B)

    @pytest.mark.parametrize("ctx", [CTX_B, CTX_S], ids=["bicross", "standard"])
    def test_agrees_with_preset_multiplication(self, ctx):
        """Once the relation table is derived, the cross product must coincide
        with plain normal-ordered multiplication on mixed elements."""
        preset = ctx.preset
        samples = [
            gen(Gen.X0),
            gen(Gen.X1),
            gen(Gen.P0),
            gen(Gen.P1),
            Element.q_power(1),
            Element.term(Monomial((Gen.X1, Gen.P1)), Scalar.one()),
            Element.term(Monomial((Gen.X0, Gen.X1), 1), Scalar.i()),
        ]
        for a in samples:
            for b in samples:
                assert cross_multiply(a, b, ctx) == preset.multiply(a, b)


class TestDerivation:
    @pytest.mark.parametrize("basis", [Basis.BICROSS, Basis.STANDARD])
    def test_matches_preset_tables(self, basis):
        report = derive_phase_space_relations(basis)
        assert report.passed, report.failures()
        assert len(report.entries) == 36

    def test_report_shape(self):
        payload = derive_phase_space_relations(Basis.BICROSS).to_dict()
        assert payload["basis"] == "bicross"
        assert payload["pass"] is True
        entry = payload["entries"][0]
        assert set(entry) == {"pair", "derived_rendering", "table_rendering", "match"}

    def test_key_bicross_lines(self):
        derived = derived_relation_elements(Basis.BICROSS)
        assert derived["[x0, P1]"] == Element.term(
            Monomial((Gen.P1,)), sc(0, 1, hbar=1, kappa=-1, c=-1)
        )
        assert derived["[x1, P0]"].is_zero
        assert derived["[x1, P1]"] == Element.from_scalar(sc(0, 1, hbar=1))

    def test_key_standard_lines(self):
        derived = derived_relation_elements(Basis.STANDARD)
        assert derived["[x1, P1]"] == Element.term(Monomial((), 1), sc(0, 1, hbar=1))
        assert derived["[x0, P1]"] == Element.term(
            Monomial((Gen.P1,)), sc(0, Fraction(1, 2), hbar=1, kappa=-1, c=-1)
        )

    @pytest.mark.parametrize("basis", [Basis.BICROSS, Basis.STANDARD])
    def test_classical_limit_is_canonical(self, basis):
        derived = derived_relation_elements(basis)
        canonical = canonical_limit_table()
        for name, element in derived.items():
            assert classical_limit(element) == canonical[name], name

    def test_convention_selection(self):
        for basis in (Basis.BICROSS, Basis.STANDARD):
            evidence = {ev.convention: ev for ev in select_convention(basis)}
            assert evidence["left"].selected
            assert not evidence["right"].selected
            # the generator-level table alone does not discriminate; the
            # pairing well-definedness and module-algebra law do
            assert evidence["right"].reproduces_table
            assert not evidence["right"].pairing_well_defined


class TestBasisMap:
    def test_exactly_one_transformation(self):
        report = basis_map_check()
        assert len(report.transformations) == 1
        named = report.named
        assert named == "standard->bicross with P_i -> P_i q"

    def test_candidate_details(self):
        report = basis_map_check()
        by_key = {(c.direction, c.sign): c for c in report.candidates}
        assert by_key[("standard->bicross", 1)].intertwines
        assert by_key[("bicross->standard", -1)].intertwines
        assert not by_key[("standard->bicross", -1)].intertwines
        assert not by_key[("bicross->standard", 1)].intertwines
        # passing candidates are mutually inverse bijections
        assert len(report.passing) == 2
        assert all(c.counit_compatible for c in report.candidates)

    def test_residuals_recorded_for_failures(self):
        report = basis_map_check()
        failing = [c for c in report.candidates if not c.intertwines]
        assert failing and all(c.residuals for c in failing)

    def test_serialization(self):
        payload = basis_map_check().to_dict()
        assert payload["named"] == "standard->bicross with P_i -> P_i q"
        assert len(payload["candidates"]) == 4
        assert len(payload["transformations"]) == 1
