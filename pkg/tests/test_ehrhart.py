import pytest

from ehrhart_delta import constructions
from ehrhart_delta.ehrhart import (
    EhrhartProfile,
    delta_bar,
    delta_transform,
    delta_vector,
    degree_codegree,
    ehrhart_counts,
    ehrhart_profile,
    reciprocity_check,
)
from ehrhart_delta.errors import NegativeDeltaCoefficient
from ehrhart_delta.polynomial import IntPolynomial
from oracles import brute_count, series_numerator


def test_counts_of_small_polytopes():
    assert ehrhart_counts(constructions.standard_simplex(2)) == [1, 3, 6]
    assert ehrhart_counts(constructions.unit_cube(2)) == [1, 4, 9]


def test_example_counts_match_scan():
    P = constructions.example_cual()
    f = ehrhart_counts(P)
    assert f == [1] + [brute_count(P.vertices, m) for m in range(1, 6)]
    assert delta_vector(f, 5).to_list() == [1, 2, 1, 2]


def test_delta_vector_examples():
    assert delta_vector([1, 3, 6], 2).to_list() == [1]
    assert delta_vector([1, 4, 9], 2).to_list() == [1, 1]


def test_delta_transform_matches_series_expansion():
    f = [1, 8, 34, 106, 271, 602]
    assert [c for c in delta_transform(f, 6) if c] == series_numerator(f, 6)


def test_negative_delta_raises():
    with pytest.raises(NegativeDeltaCoefficient):
        delta_vector([1, 2, 2], 2)
    with pytest.raises(ValueError):
        delta_vector([2, 3, 6], 2)


def test_degree_codegree():
    assert degree_codegree(IntPolynomial([1]), 2) == (0, 3)
    assert degree_codegree(IntPolynomial([1, 2, 1, 2]), 5) == (3, 3)
    assert degree_codegree(IntPolynomial([1, 1]), 2) == (1, 2)


def test_delta_bar():
    assert delta_bar(IntPolynomial([1]), 4).to_list() == [1, 1, 1, 1]
    assert delta_bar(IntPolynomial([1, 2, 1, 2]), 3).to_list() == [1, 3, 4, 5, 3, 2]
    assert delta_bar(IntPolynomial([1, 1]), 2).to_list() == [1, 2, 1]


def test_profile_round_trip_through_series(corpus_entries):
    for e in corpus_entries:
        p = e.profile
        rebuilt = EhrhartProfile.from_delta(p.delta, p.d)
        assert list(rebuilt.f) == list(p.f)
        assert (rebuilt.s, rebuilt.l) == (p.s, p.l)


def test_delta_d_is_interior_count(corpus_entries):
    for e in corpus_entries:
        if e.Q.rank <= 4 and e.Q.rank >= 1:
            assert e.profile.delta[e.profile.d] == brute_count(e.Q.vertices, 1, interior=True)


def test_reciprocity_on_corpus(corpus_entries):
    for e in corpus_entries:
        assert reciprocity_check(e.Q, e.profile)


def test_profile_of_point_and_segment():
    p = ehrhart_profile(constructions.standard_simplex(0))
    assert p.delta.to_list() == [1] and p.l == 1
    seg = ehrhart_profile(constructions.segment(3))
    assert seg.delta.to_list() == [1, 2] and seg.l == 1
