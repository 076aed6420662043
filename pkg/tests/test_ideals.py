import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials
from submult.errors import ConservativeFallbackWarning, ValidationError
from submult.ideals import (
    Ideal,
    MonomialOrder,
    eliminant,
    germ_colength,
    germ_member,
    groebner,
    is_germ_unit,
    member,
    normal_form,
    radical_step,
    root_order,
    truncated,
)
from submult.poly import INF, Polynomial, format_poly, monomials_of_degree, parse

ZW = ("z", "w")


def p(text, variables=ZW):
    return parse(text, variables)


def ideal(*strings, variables=ZW):
    return Ideal.from_strings(strings, variables)


J1_234 = ("z^5 + 3*z*w^2", "6*z^2*w", "-5*z^8 + 6*z^4*w^2 - 9*w^4")


# -- Groebner bases ---------------------------------------------------------------


def test_monomial_ideal_is_its_own_basis():
    basis = ideal("z^2", "w^3").groebner()
    assert [format_poly(g, ZW) for g in basis] == ["z^2", "w^3"]
    basis2 = ideal("z^2", "z*w", "w^2").groebner()
    assert [format_poly(g, ZW) for g in basis2] == ["w^2", "z*w", "z^2"]


def test_basis_reduces_listed_generator():
    J1 = ideal(*J1_234)
    assert normal_form(p(J1_234[0]), J1.groebner(), J1.default_order()).is_zero()


def test_groebner_cache_is_deterministic():
    one = ideal(*J1_234)
    again = ideal(*J1_234)
    assert one.groebner() is one.groebner()  # cached
    assert one.groebner() == again.groebner()


def test_groebner_idempotence():
    J1 = ideal(*J1_234)
    basis = J1.groebner()
    rebuilt = Ideal(2, basis).groebner()
    assert rebuilt == basis


def test_zero_ideal_has_empty_basis():
    assert Ideal(2, ()).groebner() == ()


# -- membership ---------------------------------------------------------------------


def test_zero_is_member_of_everything():
    assert member(p("0"), ideal("z"))
    assert member(p("0"), Ideal(2, ()))
    assert not member(p("z"), Ideal(2, ()))


def test_membership_in_second_stage_ideal():
    J1 = ideal(*J1_234)
    assert member(p("z^5 + 3*z*w^2"), J1)
    assert not member(p("z^3"), J1)  # K - 1 = 3 stays outside


@given(polynomials(max_degree=2, max_terms=3), polynomials(max_degree=2, max_terms=3))
def test_membership_closed_under_ideal_operations(f, g):
    base = ideal("z^2", "z*w - w^3")
    lifted_f = f * p("z^2") + g * p("z*w - w^3")
    assert member(lifted_f, base)
    if member(f, base) and member(g, base):
        assert member(f + g, base)


# -- germ colength ---------------------------------------------------------------------


def test_colength_of_maximal_ideal():
    report = germ_colength(ideal("z", "w"))
    assert report.colength == 1
    assert report.m_primary and not report.capped


def test_colength_of_square_of_maximal_ideal():
    # standard monomials counted by hand: 1, z, w
    report = germ_colength(ideal("z^2", "z*w", "w^2"))
    assert report.colength == 3
    assert report.stabilization_degree == 2


@pytest.mark.parametrize("M,N,K", [(2, 3, 4), (3, 3, 4), (4, 2, 5), (2, 4, 6)])
def test_colength_of_product_family(M, N, K):
    report = germ_colength(ideal(f"z^{M}", f"w^{N} + w*z^{K}"))
    assert report.colength == M * N


def test_colength_monotone_under_more_generators():
    small = germ_colength(ideal("z^3", "w^3"))
    bigger = germ_colength(ideal("z^3", "w^3", "z*w"))
    assert bigger.colength <= small.colength


def test_colength_cap_produces_flagged_report():
    report = germ_colength(ideal("z^3", "z*w"), cap=12)
    assert report.colength == INF
    assert report.capped and not report.m_primary
    assert report.stabilization_degree is None


def test_colength_requires_cap_of_two():
    with pytest.raises(ValidationError):
        germ_colength(ideal("z"), cap=1)


def _lattice_count(exponent_sets, bound):
    # independent counting oracle for monomial ideals: walk the lattice
    count = 0
    for d in range(bound):
        for mono in monomials_of_degree(2, d):
            if not any(all(m >= e for m, e in zip(mono, gen)) for gen in exponent_sets):
                count += 1
    return count


@pytest.mark.parametrize(
    "gens",
    [((2, 0), (0, 2)), ((3, 0), (1, 1), (0, 4)), ((2, 1), (1, 3), (5, 0), (0, 5))],
)
def test_monomial_colength_matches_lattice_count(gens):
    polys = [Polynomial.monomial(g) for g in gens]
    report = germ_colength(Ideal(2, polys))
    assert report.colength == _lattice_count(gens, report.stabilization_degree + 1)


# -- germ membership and root orders -----------------------------------------------------


def test_germ_membership_examples():
    J1 = ideal(*J1_234)
    report = germ_colength(J1)
    assert not germ_member(p("z^3"), J1, report)
    assert not germ_member(p("z^4"), J1, report)  # the tail exponent itself stays out
    assert germ_member(p("z^6"), J1, report)
    # anything vanishing to the stabilization degree is inside
    for mono in monomials_of_degree(2, report.stabilization_degree):
        assert germ_member(Polynomial.monomial(mono), J1, report)


def test_germ_membership_conservative_fallback_warns():
    I = ideal("z^3", "z*w")
    report = germ_colength(I, cap=8)
    with pytest.warns(ConservativeFallbackWarning):
        assert germ_member(p("z^3"), I, report)
    with pytest.warns(ConservativeFallbackWarning):
        assert not germ_member(p("z"), I, report)


def test_root_orders_simple():
    line = Ideal.from_strings(["z"], ("z",))
    assert root_order(parse("z", ("z",)), line) == 1
    one_var = Ideal.from_strings(["z^3"], ("z",))
    assert root_order(parse("z", ("z",)), one_var) == 3
    assert root_order(parse("z", ("z",)), one_var, s_max=2) is None


def test_root_order_in_second_stage_ideal():
    J1 = ideal(*J1_234)
    report = germ_colength(J1)
    # sharp root orders, pinned by hand certificates: z^6 = z*(z*g_w) - (w/2)*(6*z^2*w)
    assert root_order(p("z"), J1, report=report) == 6
    assert root_order(p("w"), J1, report=report) == 4


def test_nakayama_soundness_on_stabilized_reports():
    for gens in [("z", "w"), ("z^2", "z*w", "w^2"), J1_234, ("z^3", "w^2 + z*w")]:
        I = ideal(*gens)
        report = germ_colength(I)
        assert report.m_primary
        for mono in monomials_of_degree(2, report.stabilization_degree):
            assert germ_member(Polynomial.monomial(mono), I, report)


# -- radical stages ------------------------------------------------------------------------


def test_radical_of_principal_ideal():
    outcome = radical_step(ideal("z^2*(3*w^2 + z^4)"))
    assert outcome.method == "principal"
    assert [format_poly(g, ZW) for g in outcome.generators] == ["z^5 + 3*z*w^2"]
    assert outcome.max_root_order == 2


def test_radical_of_stabilized_ideal_is_maximal():
    outcome = radical_step(ideal(*J1_234))
    assert outcome.method == "m-primary"
    assert [format_poly(g, ZW) for g in outcome.generators] == ["z", "w"]
    assert dict((format_poly(g, ZW), s) for g, s in outcome.root_orders) == {
        "z": 6,
        "w": 4,
    }


def test_radical_of_monomial_square():
    outcome = radical_step(ideal("z^2", "z*w", "w^2"))
    assert outcome.method == "m-primary"
    assert [format_poly(g, ZW) for g in outcome.generators] == ["z", "w"]


def test_radical_partial_enrichment():
    outcome = radical_step(ideal("z^2", "z*w"))
    assert outcome.method == "partial"
    gens = [format_poly(g, ZW) for g in outcome.generators]
    assert "z" in gens
    assert not outcome.stalled


def test_radical_stall_is_data():
    flat = Ideal.from_strings(["z*w", "z*v"], ("z", "w", "v"))
    outcome = radical_step(flat)
    assert outcome.stalled
    assert outcome.method == "none"
    assert outcome.generators == flat.generators


def test_radical_idempotence_on_generated_ideal():
    for gens in [("z^2*(3*w^2 + z^4)",), ("z^2", "z*w"), J1_234]:
        first = radical_step(ideal(*gens))
        second = radical_step(Ideal(2, first.generators))
        lhs = Ideal(2, first.generators)
        rhs = Ideal(2, second.generators)
        assert all(member(g, lhs) for g in rhs.generators)
        assert all(member(g, rhs) for g in lhs.generators)


def test_radical_contains_squarefree_parts_of_generators():
    from submult.poly import squarefree_part

    for gens in [("z^2*(3*w^2 + z^4)",), ("z^2", "z*w", "w^2"), J1_234]:
        I = ideal(*gens)
        outcome = radical_step(I)
        produced = Ideal(2, outcome.generators)
        report = germ_colength(produced)
        for g in I.generators:
            q = squarefree_part(g)
            if report.m_primary:
                assert germ_member(q, produced, report)
            else:
                assert member(q, produced)


def test_unit_germ_detection():
    assert is_germ_unit(ideal("1 + z"))
    assert not is_germ_unit(ideal("z"))
    assert not is_germ_unit(Ideal(2, ()))
    outcome = radical_step(ideal("1 + z"))
    assert outcome.method == "none"
    assert [format_poly(g, ZW) for g in outcome.generators] == ["1"]


# -- elimination -------------------------------------------------------------------------------


def test_eliminant_by_substitution_oracle():
    # substituting z = w shows z^2 = w^2 lands in the ideal, and degree 1 cannot
    assert format_poly(eliminant(ideal("z - w", "w^2"), 0), ZW) == "z^2"


def test_eliminant_trivial_and_empty():
    assert format_poly(eliminant(ideal("z"), 0), ZW) == "z"
    assert eliminant(ideal("z*w"), 0) is None
    assert eliminant(Ideal(2, ()), 0) is None


def test_eliminant_of_second_stage_ideal_exists():
    J1 = ideal(*J1_234)
    found = eliminant(J1, 0)
    assert found is not None
    assert found.degree_in(1) == 0 and found.degree_in(0) >= 1
    report = germ_colength(J1)
    assert found.degree_in(0) <= report.colength


# -- randomized Nakayama suite ------------------------------------------------------------------


def test_nakayama_soundness_random_m_primary_ideals():
    rng = random.Random(734)
    found = 0
    attempts = 0
    while found < 50 and attempts < 400:
        attempts += 1
        a, b = rng.randint(1, 4), rng.randint(1, 4)
        tail1 = _random_tail(rng)
        tail2 = _random_tail(rng)
        I = Ideal(2, [p(f"z^{a}") + tail1, p(f"w^{b}") + tail2])
        report = germ_colength(I, cap=24)
        if not report.m_primary:
            continue
        found += 1
        for mono in monomials_of_degree(2, report.stabilization_degree):
            assert germ_member(Polynomial.monomial(mono), I, report)
    assert found == 50


def _random_tail(rng):
    out = Polynomial.zero(2)
    for _ in range(rng.randint(0, 3)):
        mono = (rng.randint(0, 2), rng.randint(0, 2))
        if sum(mono) == 0:
            continue
        out = out + Polynomial.monomial(mono, Fraction(rng.randint(-2, 2)))
    return out
