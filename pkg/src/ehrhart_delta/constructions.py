"""Named polytopes and combinators."""

from .errors import DegeneratePolytope, DimensionMismatch
from .geometry import LatticePolytope


def _unit(i, n):
    return tuple(int(j == i) for j in range(n))


def standard_simplex(d):
    """``conv{0, e_1, ..., e_d}``."""
    if d < 0:
        raise ValueError("dimension must be non-negative")
    return LatticePolytope(((0,) * d,) + tuple(_unit(i, d) for i in range(d)), d)


def standard_reflexive_simplex(d):
    """``conv{e_1, ..., e_d, -e_1 - ... - e_d}``."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return LatticePolytope(tuple(_unit(i, d) for i in range(d)) + ((-1,) * d,), d)


def unit_cube(d):
    """``[0, 1]^d`` with vertices in lexicographic order."""
    if d < 0:
        raise ValueError("dimension must be non-negative")
    verts = [()]
    for _ in range(d):
        verts = [v + (x,) for v in verts for x in (0, 1)]
    return LatticePolytope(tuple(verts), d)


def dilate(P, k):
    if k < 1:
        raise ValueError("dilation factor must be positive")
    return P.scaled(k)


def pyramid(P):
    """``conv(P × {1} ∪ {0})`` one rank up."""
    if not P.is_full_dimensional:
        raise DegeneratePolytope("pyramid needs a full-dimensional base")
    verts = ((0,) * (P.rank + 1),) + tuple(v + (1,) for v in P.vertices)
    return LatticePolytope(verts, P.rank + 1)


def henk_tagami_tensor(P, Q):
    """``conv(P × {0} × {0} ∪ {0} × Q × {1})`` in rank ``rank P + rank Q + 1``."""
    if not P.is_full_dimensional or not Q.is_full_dimensional:
        raise DimensionMismatch("both factors must be full-dimensional in their lattices")
    n, k = P.rank, Q.rank
    verts = tuple(v + (0,) * k + (0,) for v in P.vertices)
    verts += tuple((0,) * n + w + (1,) for w in Q.vertices)
    return LatticePolytope(verts, n + k + 1)


def example_cual():
    """The 5-simplex ``conv{0, e1, e1+e2, e2+2e3, 3e4+e5, e5}`` with delta = (1, 2, 1, 2, 0, 0)."""
    return LatticePolytope(
        (
            (0, 0, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (1, 1, 0, 0, 0),
            (0, 1, 2, 0, 0),
            (0, 0, 0, 3, 1),
            (0, 0, 0, 0, 1),
        ),
        5,
    )


def segment(length=1):
    return LatticePolytope(((0,), (length,)), 1)


NAMED = {
    "standard-simplex": (standard_simplex, ["d"]),
    "reflexive-simplex": (standard_reflexive_simplex, ["d"]),
    "unit-cube": (unit_cube, ["d"]),
    "example-cual": (example_cual, []),
}
