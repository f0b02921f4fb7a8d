"""Lattice polytopes: vertex descriptions, facets and lattice-point enumeration.

A polytope is stored by its vertices in ``Z^n``.  Facets are derived by brute
force over affinely independent vertex subsets, which is fine at the sizes
this package targets (dimension at most about 8, a handful of vertices).

Lattice points of a dilate ``mP`` are enumerated coordinate by coordinate.
For every prefix length ``k`` the facets of the projection of ``P`` onto the
first ``k`` coordinates bound the next coordinate, so only prefixes that
extend to real points of ``mP`` are ever visited.
"""

import enum
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import linalg
from .errors import DegeneratePolytope, EnumerationLimitExceeded

DEFAULT_MAX_POINTS = 10**7


def max_points():
    """Cap on scanned candidate points, from ``EHRHART_MAX_POINTS``."""
    raw = os.environ.get("EHRHART_MAX_POINTS")
    if not raw:
        return DEFAULT_MAX_POINTS
    return int(raw)


class PointLocation(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class PointFilter(enum.Enum):
    ALL = "all"
    INTERIOR = "interior"
    BOUNDARY = "boundary"


@dataclass(frozen=True, order=True)
class Facet:
    """The inequality ``<normal, x> <= offset``, with a primitive normal."""

    normal: tuple
    offset: int

    def value(self, x):
        return linalg.dot(self.normal, x)

    def contains(self, x, m=1):
        return self.value(x) == m * self.offset


def _check_point(p, n):
    p = tuple(p)
    if len(p) != n:
        raise ValueError(f"point {p} does not have {n} coordinates")
    for x in p:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"lattice point coordinates must be integers, got {x!r}")
    return p


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer points in ``Z^rank``.

    Use :meth:`from_points` to build one from an arbitrary point list; the
    plain constructor trusts that every listed point is a vertex.
    """

    vertices: tuple
    rank: int

    def __post_init__(self):
        if not self.vertices:
            raise DegeneratePolytope("a polytope needs at least one vertex")
        verts = tuple(_check_point(v, self.rank) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points, rank=None):
        """Convex hull of ``points``, keeping only the vertices (first occurrence order)."""
        points = [tuple(p) for p in points]
        if not points:
            raise DegeneratePolytope("a polytope needs at least one point")
        if rank is None:
            rank = len(points[0])
        points = [_check_point(p, rank) for p in points]
        unique = list(dict.fromkeys(points))
        return cls(tuple(_vertices_of(unique, rank)), rank)

    @cached_property
    def dim(self):
        return linalg.affine_rank(self.vertices)

    @property
    def is_full_dimensional(self):
        return self.dim == self.rank

    @cached_property
    def facets(self):
        return facets(self)

    def scaled(self, k):
        return LatticePolytope(tuple(tuple(k * x for x in v) for v in self.vertices), self.rank)

    def translated(self, w):
        return LatticePolytope(tuple(linalg.sub(v, w) for v in self.vertices), self.rank)

    def to_dict(self):
        return {"rank": self.rank, "vertices": [list(v) for v in self.vertices]}

    def __repr__(self):
        return f"LatticePolytope(rank={self.rank}, vertices={[list(v) for v in self.vertices]})"


def _facets_of_points(points, n):
    """Facets of conv(points) for a full-dimensional point set in Z^n."""
    points = list(points)
    if n == 0:
        return []
    found = set()
    for subset in combinations(points, n):
        base = subset[0]
        normal = linalg.normal_vector([linalg.sub(p, base) for p in subset[1:]], n)
        if not any(normal):
            continue
        offset = linalg.dot(normal, base)
        values = [linalg.dot(normal, p) for p in points]
        if all(v <= offset for v in values):
            found.add(Facet(normal, offset))
        elif all(v >= offset for v in values):
            found.add(Facet(tuple(-x for x in normal), -offset))
    return sorted(found)


def _vertices_of(points, n):
    """Subset of ``points`` that are vertices of their convex hull, in input order."""
    if len(points) <= 1:
        return points
    d = linalg.affine_rank(points)
    if d < n:
        amap = _affine_map(points, d)
        local = [amap.to_lattice(p) for p in points]
        keep = set(_vertices_of(local, d))
        return [p for p, q in zip(points, local) if q in keep]
    facet_list = _facets_of_points(points, n)
    verts = []
    for p in points:
        tight = [f.normal for f in facet_list if f.value(p) == f.offset]
        if linalg.rank(tight) == n:
            verts.append(p)
    return verts


@dataclass(frozen=True)
class AffineMap:
    """Lattice isomorphism between ``aff(P) ∩ Z^n`` and ``Z^d``.

    ``x = origin + y @ basis`` and ``y = ((x - origin) @ transform)[:d]``.
    """

    origin: tuple
    basis: tuple
    transform: tuple

    @property
    def source_rank(self):
        return len(self.origin)

    @property
    def target_rank(self):
        return len(self.basis)

    @property
    def is_identity(self):
        n = len(self.origin)
        eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return not any(self.origin) and self.basis == eye

    def to_lattice(self, x):
        diff = linalg.sub(x, self.origin)
        d = len(self.basis)
        y = tuple(sum(diff[i] * self.transform[i][j] for i in range(len(diff))) for j in range(d))
        if self.from_lattice(y) != tuple(x):
            raise ValueError(f"{tuple(x)} is not a lattice point of the affine hull")
        return y

    def from_lattice(self, y):
        n = len(self.origin)
        return tuple(self.origin[i] + sum(y[j] * self.basis[j][i] for j in range(len(y))) for i in range(n))

    def to_dict(self):
        return {
            "origin": list(self.origin),
            "basis": [list(b) for b in self.basis],
        }


def identity_map(n):
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return AffineMap((0,) * n, eye, eye)


def _affine_map(points, d):
    origin = points[0]
    diffs = [linalg.sub(p, origin) for p in points[1:]]
    rows = [diffs[i] for i in linalg.independent_subset(diffs)]
    n = len(origin)
    if not rows:
        return AffineMap(origin, (), tuple((0,) * 0 for _ in range(n)))
    _, u, uinv = linalg.column_hermite(rows)
    return AffineMap(origin, tuple(uinv[:d]), tuple(u))


def normalize_full_dimensional(P, dim=None):
    """Re-express ``P`` in a lattice of rank equal to its dimension.

    Returns ``(Q, amap)`` where ``amap`` carries ``aff(P) ∩ Z^n`` onto ``Z^d``
    and ``Q`` has the mapped vertices (redundant points dropped).  A polytope
    that is already full-dimensional comes back unchanged with the identity
    map.  ``dim`` optionally asserts the expected dimension.
    """
    d = P.dim
    if dim is not None and d < dim:
        raise DegeneratePolytope(f"vertices span dimension {d}, expected {dim}")
    verts = _vertices_of(list(dict.fromkeys(P.vertices)), P.rank)
    if d == P.rank:
        Q = P if tuple(verts) == P.vertices else LatticePolytope(tuple(verts), P.rank)
        return Q, identity_map(P.rank)
    amap = _affine_map(list(P.vertices), d)
    return LatticePolytope(tuple(amap.to_lattice(v) for v in verts), d), amap


def _require_full(P):
    if P.dim != P.rank:
        raise DegeneratePolytope(
            f"polytope has dimension {P.dim} in rank {P.rank}; normalize it first"
        )


def facets(P):
    """All facets of a full-dimensional polytope, sorted."""
    _require_full(P)
    return _facets_of_points(P.vertices, P.rank)


def locate(P, x, m=1):
    """Classify the lattice point ``x`` relative to ``mP``."""
    if m < 1:
        raise ValueError("dilation factor must be positive")
    x = _check_point(x, P.rank)
    tight = False
    for f in P.facets:
        v = f.value(x)
        bound = m * f.offset
        if v > bound:
            return PointLocation.OUTSIDE
        if v == bound:
            tight = True
    return PointLocation.BOUNDARY if tight else PointLocation.INTERIOR


class _Enumerator:
    """Projection-pruned scan over the lattice points of dilates of one polytope."""

    def __init__(self, P):
        _require_full(P)
        self.P = P
        n = P.rank
        self.levels = []
        for k in range(1, n + 1):
            if k == n:
                level_facets = P.facets
            else:
                proj = list(dict.fromkeys(v[:k] for v in P.vertices))
                level_facets = _facets_of_points(proj, k)
            self.levels.append(
                [(f.normal[k - 1], f.normal[: k - 1], f.offset) for f in level_facets if f.normal[k - 1]]
            )
        self.last = [(f.normal[-1], f.normal[:-1], f.offset) for f in P.facets]

    @staticmethod
    def _range(constraints, prefix, m):
        lo = hi = None
        for a, pre, c in constraints:
            r = m * c - sum(p * q for p, q in zip(pre, prefix))
            if a > 0:
                b = r // a
                if hi is None or b < hi:
                    hi = b
            else:
                b = -((-r) // a)
                if lo is None or b > lo:
                    lo = b
        return lo, hi

    def _prefixes(self, m):
        """Yield every integer prefix of length n-1 extendable inside mP, with its last-coordinate range."""
        n = self.P.rank
        stack = [()]
        while stack:
            prefix = stack.pop()
            k = len(prefix)
            lo, hi = self._range(self.levels[k], prefix, m)
            if k == n - 1:
                if lo <= hi:
                    yield prefix, lo, hi
                continue
            for x in range(hi, lo - 1, -1):
                stack.append(prefix + (x,))

    def points(self, m, limit):
        scanned = 0
        for prefix, lo, hi in self._prefixes(m):
            scanned += hi - lo + 1
            if scanned > limit:
                raise EnumerationLimitExceeded(limit, scanned)
            for x in range(lo, hi + 1):
                yield prefix + (x,)

    def count(self, m, which, limit):
        total = 0
        scanned = 0
        for prefix, lo, hi in self._prefixes(m):
            scanned += hi - lo + 1
            if scanned > limit:
                raise EnumerationLimitExceeded(limit, scanned)
            if which is PointFilter.ALL:
                total += hi - lo + 1
                continue
            ilo, ihi = lo, hi
            for a, pre, c in self.last:
                r = m * c - sum(p * q for p, q in zip(pre, prefix)) - 1
                if a == 0:
                    if r < 0:
                        ihi = ilo - 1
                        break
                elif a > 0:
                    ihi = min(ihi, r // a)
                else:
                    ilo = max(ilo, -((-r) // a))
            interior = max(0, ihi - ilo + 1)
            total += interior if which is PointFilter.INTERIOR else hi - lo + 1 - interior
        return total


def _enumerator(P):
    cache = P.__dict__
    if "_enumerator" not in cache:
        cache["_enumerator"] = _Enumerator(P)
    return cache["_enumerator"]


def _zero_dilate(P, which):
    # mP is a single point, which is its own relative interior.
    if which is PointFilter.BOUNDARY or (which is PointFilter.INTERIOR and P.dim > 0):
        return []
    return [(0,) * P.rank]


def lattice_points(P, m=1, which=PointFilter.ALL):
    """Lexicographically sorted lattice points of ``mP`` selected by ``which``."""
    which = PointFilter(which)
    if m < 0:
        raise ValueError("dilation factor must be non-negative")
    _require_full(P)
    if m == 0 or P.rank == 0:
        return _zero_dilate(P, which)
    pts = []
    for x in _enumerator(P).points(m, max_points()):
        if which is PointFilter.ALL or locate(P, x, m).value == which.value:
            pts.append(x)
    pts.sort()
    return pts


def count_lattice_points(P, m=1, which=PointFilter.ALL):
    """Number of lattice points of ``mP`` selected by ``which``, without listing them."""
    which = PointFilter(which)
    if m < 0:
        raise ValueError("dilation factor must be non-negative")
    _require_full(P)
    if m == 0 or P.rank == 0:
        return len(_zero_dilate(P, which))
    return _enumerator(P).count(m, which, max_points())


def interior_points(P, m=1):
    return lattice_points(P, m, PointFilter.INTERIOR)


def boundary_points(P, m=1):
    return lattice_points(P, m, PointFilter.BOUNDARY)
