import pytest

from ehrhart_delta import constructions
from ehrhart_delta.ehrhart import ehrhart_profile
from ehrhart_delta.errors import DegeneratePolytope, DimensionMismatch
from ehrhart_delta.geometry import LatticePolytope, count_lattice_points, normalize_full_dimensional


def test_named_are_full_dimensional():
    for P in [
        constructions.standard_simplex(3),
        constructions.standard_reflexive_simplex(3),
        constructions.unit_cube(3),
        constructions.example_cual(),
        constructions.pyramid(constructions.unit_cube(2)),
    ]:
        Q, amap = normalize_full_dimensional(P)
        assert Q == P and amap.is_identity


def test_simplex_counts():
    assert constructions.standard_simplex(1).vertices == ((0,), (1,))
    assert ehrhart_profile(constructions.standard_simplex(2)).delta.to_list() == [1]
    assert count_lattice_points(constructions.standard_simplex(5)) == 6


def test_reflexive_simplex_delta():
    for d in (2, 3):
        assert ehrhart_profile(constructions.standard_reflexive_simplex(d)).delta.to_list() == [1] * (d + 1)


def test_pyramid():
    assert ehrhart_profile(constructions.pyramid(constructions.segment())).delta.to_list() == [1]
    assert count_lattice_points(constructions.pyramid(constructions.unit_cube(2))) == 5
    prof = ehrhart_profile(constructions.pyramid(constructions.standard_reflexive_simplex(2)))
    assert prof.d == 3 and sum(prof.delta) == 3  # normalised volume of the pyramid equals that of the base
    with pytest.raises(DegeneratePolytope):
        constructions.pyramid(LatticePolytope.from_points([(0, 0), (1, 1)]))


def test_tensor_dimension_and_errors():
    T = constructions.henk_tagami_tensor(constructions.standard_simplex(2), constructions.standard_reflexive_simplex(2))
    assert T.rank == 5 and T.dim == 5
    with pytest.raises(DimensionMismatch):
        constructions.henk_tagami_tensor(LatticePolytope.from_points([(0, 0), (1, 1)]), constructions.segment())


def test_tensor_product_law_small():
    for P in (constructions.segment(), constructions.standard_simplex(2), constructions.unit_cube(2)):
        prof = ehrhart_profile(P)
        Q = constructions.standard_reflexive_simplex(prof.l - 1)
        assert ehrhart_profile(constructions.henk_tagami_tensor(P, Q)).delta == prof.delta_bar


def test_dilate_and_validation():
    assert constructions.dilate(constructions.unit_cube(2), 3).vertices[-1] == (3, 3)
    with pytest.raises(ValueError):
        constructions.dilate(constructions.unit_cube(2), 0)
    with pytest.raises(ValueError):
        constructions.standard_reflexive_simplex(0)
