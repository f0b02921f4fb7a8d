import pytest
from hypothesis import given, settings, strategies as st

from ehrhart_delta import constructions
from ehrhart_delta.decomposition import (
    ABDecomposition,
    closed_form_coefficients,
    decompose_closed_form,
    delta_K_oracle,
    solve_symmetric_system,
    unimodality_bridge,
    verify_uniqueness,
)
from ehrhart_delta.ehrhart import delta_bar
from ehrhart_delta.errors import DecompositionInvariantViolation
from ehrhart_delta.inequalities import Family, audit, by_family
from ehrhart_delta.polynomial import IntPolynomial

CUAL = IntPolynomial([1, 2, 1, 2])


@st.composite
def delta_vectors(draw, max_d=7):
    """Non-negative vectors with delta_0 = 1, not necessarily coming from a polytope."""
    d = draw(st.integers(1, max_d))
    s = draw(st.integers(0, d))
    tail = draw(st.lists(st.integers(0, 5), min_size=s, max_size=s))
    if s:
        tail[-1] = draw(st.integers(1, 5))
    return IntPolynomial([1] + tail), d


def test_example_decomposition():
    dec = decompose_closed_form(CUAL, 5)
    assert dec.a.to_list() == [1, 3, 4, 4, 3, 1]
    assert dec.b.to_list() == [1, 0, 1]
    assert dec.to_dict() == {"a": [1, 3, 4, 4, 3, 1], "b": [1, 0, 1], "l": 3}


def test_reflexive_simplex_and_square():
    for d in range(1, 6):
        dec = decompose_closed_form(IntPolynomial([1] * (d + 1)), d)
        assert dec.a == IntPolynomial([1] * (d + 1)) and dec.b.is_zero() and dec.l == 1
    dec = decompose_closed_form(IntPolynomial([1, 1]), 2)
    assert dec.a.to_list() == [1, 2, 1] and dec.b.to_list() == []
    assert dec.to_dict()["b"] == []


def test_invariant_violation_on_non_delta():
    # b_0 = delta_s - delta_0 < 0
    with pytest.raises(DecompositionInvariantViolation):
        decompose_closed_form(IntPolynomial([2, 0, 1]), 3)
    with pytest.raises(ValueError):
        decompose_closed_form(CUAL, 5, s=3, l=2)


def test_verify_uniqueness():
    dec = decompose_closed_form(CUAL, 5)
    dbar = delta_bar(CUAL, 3)
    assert verify_uniqueness(dbar, 5, 3, dec, CUAL)
    a = dec.a + IntPolynomial([0, 1, 0, 0, 1])
    b = dec.b - IntPolynomial([0, 0, 1])
    broken = ABDecomposition(a, b, 3, 5)
    assert not verify_uniqueness(dbar, 5, 3, broken, CUAL)


@given(delta_vectors())
@settings(max_examples=300, deadline=None)
def test_symmetric_system_has_the_closed_form_as_unique_solution(case):
    delta, d = case
    l = d + 1 - delta.degree
    solved = solve_symmetric_system(delta_bar(delta, l), d, l)
    assert solved is not None
    a, b, unique = solved
    assert unique
    ca, cb = closed_form_coefficients(delta, d)
    assert IntPolynomial(a) == IntPolynomial(ca)
    assert IntPolynomial(b) == IntPolynomial(cb)


@given(delta_vectors())
@settings(max_examples=500, deadline=None)
def test_coefficient_conditions_match_inequalities(case):
    delta, d = case
    s = delta.degree
    l = d + 1 - s
    a, b = closed_form_coefficients(delta, d)
    dbar = delta_bar(delta, l)
    r = by_family(audit(delta.to_list(), d, s, l))
    assert all(x >= 0 for x in a) == r[Family.HIBI_INEQ1].holds
    assert all(x >= 0 for x in b) == r[Family.STANLEY_INEQ2].holds == r[Family.YOKE_I3].holds
    assert all(a[1] <= a[i] for i in range(2, d)) == r[Family.YOKE_I2].holds
    assert all(dbar[1] <= dbar[i] for i in range(2, d)) == r[Family.YOKE_I4].holds
    assert all(x > 0 for x in a) == r[Family.SUM_INEQ5].holds


@given(delta_vectors())
@settings(max_examples=200, deadline=None)
def test_closed_form_recombines_with_symmetry(case):
    delta, d = case
    l = d + 1 - delta.degree
    a, b = closed_form_coefficients(delta, d)
    assert IntPolynomial(a).is_palindromic(d)
    assert IntPolynomial(b).is_palindromic(d - l)
    assert IntPolynomial(a) + IntPolynomial(b).shift(l) == delta_bar(delta, l)


def test_delta_K_small_cases():
    assert delta_K_oracle(constructions.unit_cube(2)).to_list() == [1, 2, 1]
    assert delta_K_oracle(constructions.standard_simplex(2)).to_list() == [1, 1, 1]
    assert delta_K_oracle(constructions.example_cual()).to_list() == [1, 3, 4, 4, 3, 1]


def test_unimodality_bridge():
    assert unimodality_bridge(CUAL, 5) == [2, 1]
    assert unimodality_bridge(IntPolynomial([1]), 4) == [0, 0]


def test_bridge_nonnegative_on_small_dimensions(corpus_entries):
    for e in corpus_entries:
        p = e.profile
        if p.d <= 5:
            assert all(g >= 0 for g in unimodality_bridge(p.delta, p.d)), e.name
