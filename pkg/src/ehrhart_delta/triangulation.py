"""Lattice triangulations of the boundary of a polytope and the box-point route to ``a`` and ``b``.

Each facet of ``P`` is triangulated by placing its lattice points in a fixed
global order.  Placing is the regular subdivision for heights that grow
steeply along the order, and regular subdivisions restrict to faces, so the
facet triangulations agree on shared ridges.  The same heights, read as
small outward radial perturbations of the boundary points, show that the fan
over the result is the face fan of a polytope: the triangulation of ``∂P`` is
regular.

For a face ``F`` with vertices ``v_i`` the cone ``σ_F`` is spanned by the
lifted points ``(v_i, 1)`` in ``Z^(d+1)``; ``σ'_F`` adds ``(v̄, l)`` for an
interior point ``v̄`` of ``lP``.  Box points are the lattice points of the open
parallelepiped of the generators; their last coordinate is the height.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, prod

from . import linalg
from .decomposition import ABDecomposition
from .ehrhart import ehrhart_profile
from .errors import (
    ConsistencyError,
    DegeneratePolytope,
    NoInteriorPoint,
    PolytopeFormatError,
    ShiftUnderflow,
)
from .geometry import PointFilter, boundary_points, lattice_points, normalize_full_dimensional
from .polynomial import IntPolynomial

@dataclass(frozen=True)
class BoundaryTriangulation:
    """Simplicial complex on the boundary lattice points of a ``d``-polytope.

    ``maximal_faces`` holds sorted index tuples of ``d`` points each.  Faces
    of lower dimension, including the empty face, are derived on demand.
    """

    points: tuple
    maximal_faces: tuple
    d: int
    regular: bool = True
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def all_faces(self):
        faces = set()
        for face in self.maximal_faces:
            for r in range(len(face) + 1):
                faces.update(combinations(face, r))
        return sorted(faces, key=lambda f: (len(f), f))

    @cached_property
    def face_counts(self):
        """For each face F, the number of faces G ⊇ F of each dimension (index dim G + 1)."""
        counts = defaultdict(lambda: [0] * (self.d + 1))
        for g in self.all_faces:
            for r in range(len(g) + 1):
                for f in combinations(g, r):
                    counts[f][len(g)] += 1
        return dict(counts)

    def f_vector(self):
        out = [0] * (self.d + 1)
        for face in self.all_faces:
            out[len(face)] += 1
        return out

    def to_dict(self):
        return {
            "points": [list(p) for p in self.points],
            "maximal_faces": [list(f) for f in self.maximal_faces],
        }


def _barycentric(simplex_points, p):
    columns = [tuple(q) + (1,) for q in simplex_points]
    return linalg.solve(columns, tuple(p) + (1,))


def _place(order, pts):
    """Placing triangulation of the points ``pts[i]`` for ``i`` in ``order``."""
    first = order[0]
    simplices = [(first,)]
    hull = [pts[first]]
    dim = 0
    for idx in order[1:]:
        p = pts[idx]
        if linalg.affine_rank(hull + [p]) > dim:
            simplices = [s + (idx,) for s in simplices]
            hull.append(p)
            dim += 1
            continue
        owners = defaultdict(list)
        for s in simplices:
            for k in range(len(s)):
                owners[s[:k] + s[k + 1 :]].append((s, k))
        added = []
        for face, own in owners.items():
            if len(own) != 1:
                continue
            s, k = own[0]
            coeffs = _barycentric([pts[i] for i in s], p)
            if coeffs[k] < 0:
                added.append(face + (idx,))
        if not added:
            raise ValueError(f"point {p} lies inside the hull of the points placed before it")
        simplices.extend(added)
    return [tuple(sorted(s)) for s in simplices]


def triangulate_boundary(P, reverse=False):
    """Regular triangulation of ``∂P`` with every boundary lattice point as a vertex.

    Points are placed in lexicographic order, or reverse lexicographic order
    with ``reverse=True``; both orders add each point outside the hull of
    its predecessors.
    """
    if P.dim == 0:
        raise DegeneratePolytope("a point has an empty boundary")
    if P.dim != P.rank:
        raise DegeneratePolytope("triangulate the full-dimensional normalisation instead")
    pts = tuple(boundary_points(P))
    order = list(range(len(pts)))
    if reverse:
        order.reverse()
    maximal = set()
    for facet in P.facets:
        on_facet = [i for i in order if facet.contains(pts[i])]
        maximal.update(_place(on_facet, pts))
    return BoundaryTriangulation(pts, tuple(sorted(maximal)), P.dim)


def triangulation_from_dict(doc, P):
    """Load an externally supplied triangulation of ``∂P``; marked as not known to be regular."""
    try:
        points = tuple(tuple(int(x) for x in p) for p in doc["points"])
        faces = tuple(sorted(tuple(sorted(int(i) for i in f)) for f in doc["maximal_faces"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise PolytopeFormatError(f"bad triangulation document: {exc}") from exc
    _, amap = normalize_full_dimensional(P)
    if not amap.is_identity:
        raise PolytopeFormatError("triangulations are only accepted for full-dimensional input")
    if any(i < 0 or i >= len(points) for f in faces for i in f):
        raise PolytopeFormatError("maximal face refers to a missing point")
    T = BoundaryTriangulation(points, faces, P.dim, regular=False)
    problems = triangulation_problems(P, T, sample_dilates=())
    if problems:
        raise PolytopeFormatError("invalid boundary triangulation: " + "; ".join(problems))
    return T


def lift(v, height=1):
    return tuple(v) + (height,)


def simplex_index(points):
    """Normalised volume of a lattice simplex inside the lattice of its affine hull."""
    return linalg.maximal_minor_gcd([lift(p) for p in points])


def triangulation_problems(P, T, sample_dilates=(2, 3)):
    """Structural defects of ``T`` as a lattice triangulation of ``∂P`` (empty list when valid).

    Checks vertex set, simplex shape, the pseudomanifold property, per-facet
    volume bookkeeping against the facet's own Ehrhart data, and, for each
    dilate in ``sample_dilates``, that boundary lattice points are covered
    and lie in the relative interior of at most one maximal simplex.
    """
    d = P.dim
    problems = []
    expected = set(boundary_points(P))
    if set(T.points) != expected or len(T.points) != len(expected):
        problems.append("vertex set differs from the boundary lattice points")
        return problems
    by_facet = defaultdict(list)
    for face in T.maximal_faces:
        pts = [T.points[i] for i in face]
        if len(face) != d or (d > 1 and linalg.affine_rank(pts) != d - 1):
            problems.append(f"maximal face {face} is not a {d - 1}-simplex")
            continue
        homes = [f for f in P.facets if all(f.contains(p) for p in pts)]
        if not homes:
            problems.append(f"maximal face {face} is not contained in a facet")
            continue
        by_facet[homes[0]].append(face)
    if problems:
        return problems
    if d >= 2:
        ridge_count = defaultdict(int)
        for face in T.maximal_faces:
            for k in range(d):
                ridge_count[face[:k] + face[k + 1 :]] += 1
        bad = [r for r, c in ridge_count.items() if c != 2]
        if bad:
            problems.append(f"ridges not shared by exactly two maximal faces: {bad[:3]}")
    for facet in P.facets:
        facet_pts = [p for p in T.points if facet.contains(p)]
        local, _ = normalize_full_dimensional(type(P).from_points(facet_pts))
        volume = sum(ehrhart_profile(local, validate=False).delta)
        covered = sum(simplex_index([T.points[i] for i in face]) for face in by_facet[facet])
        if covered != volume:
            problems.append(f"facet {facet.normal}: simplices cover volume {covered}, facet has {volume}")
    for m in sample_dilates:
        for x in boundary_points(P, m):
            target = lift(x, m)
            closed = inside = 0
            for facet in P.facets:
                if not facet.contains(x, m):
                    continue
                for face in by_facet[facet]:
                    coeffs = linalg.solve([lift(T.points[i]) for i in face], target)
                    if coeffs is None or min(coeffs) < 0:
                        continue
                    closed += 1
                    inside += min(coeffs) > 0
            if closed == 0:
                problems.append(f"{x} on the boundary of {m}P is not covered")
            if inside > 1:
                problems.append(f"{x} lies inside {inside} maximal simplices")
    return problems


def h_vector(T, face, check=None):
    """``h_F(t) = sum over G ⊇ F of t^(dim G - dim F) (1 - t)^(d - 1 - dim G)``.

    For regular triangulations (or ``check=True``) the result is required to
    be symmetric and unimodal with ``h_0 = 1`` and to satisfy the upper bound
    ``h_i <= C(h_1 + i - 1, i)``.
    """
    face = tuple(sorted(face))
    dim_f = len(face) - 1
    top = T.d - 1 - dim_f
    counts = T.face_counts[face]
    h = IntPolynomial()
    one_minus_t = IntPolynomial([1, -1])
    for size in range(len(face), T.d + 1):
        if counts[size]:
            dim_g = size - 1
            term = IntPolynomial.monomial(dim_g - dim_f, counts[size])
            for _ in range(T.d - 1 - dim_g):
                term = term * one_minus_t
            h = h + term
    if check if check is not None else T.regular:
        problems = h_vector_problems(h, top)
        if problems:
            raise ConsistencyError(f"h-vector of face {face}: " + "; ".join(problems))
    return h


def h_vector_problems(h, top):
    problems = []
    if h.degree != top:
        problems.append(f"degree {h.degree}, expected {top}")
    if h[0] != 1:
        problems.append(f"h_0 = {h[0]}")
    if not h.is_palindromic(top):
        problems.append(f"{h} is not symmetric")
    if not all(h[i] <= h[i + 1] for i in range(top // 2)):
        problems.append(f"{h} is not unimodal")
    for i in range(1, top + 1):
        if h[i] > comb(h[1] + i - 1, i):
            problems.append(f"h_{i} = {h[i]} exceeds C(h_1 + {i - 1}, {i})")
    return problems


@dataclass(frozen=True)
class BoxPoint:
    point: tuple
    height: int
    coefficients: tuple

    def involution(self, generators):
        point = tuple(sum(g[i] for g in generators) - self.point[i] for i in range(len(self.point)))
        return BoxPoint(point, point[-1], tuple(1 - c for c in self.coefficients))


def _lower_triangular_inverse(h):
    r = len(h)
    inv = [[Fraction(0)] * r for _ in range(r)]
    for col in range(r):
        for i in range(r):
            acc = Fraction(int(i == col))
            for k in range(i):
                acc -= h[i][k] * inv[k][col]
            inv[i][col] = acc / h[i][i]
    return inv


def box_points(generators, rank=None):
    """Lattice points of the open parallelepiped spanned by independent generators.

    The lattice points of ``span ∩ Z^n`` modulo the generators form a finite
    group of order equal to the lattice index; its elements are found as the
    closure of the fractional coefficient vectors of a saturated basis.
    Those with every coefficient strictly between 0 and 1 are the box points.
    No generators means the zero cone, whose box is ``{0}`` by convention.
    """
    generators = [tuple(g) for g in generators]
    if not generators:
        if rank is None:
            raise ValueError("rank needed for the zero cone")
        return [BoxPoint((0,) * rank, 0, ())]
    r = len(generators)
    n = len(generators[0])
    hmat, _, _ = linalg.column_hermite(generators)
    index = prod(hmat[i][i] for i in range(r))
    if index == 1:
        return []
    # rows of V = H @ W, so the saturated basis W has coefficient rows H^{-1}
    inv = _lower_triangular_inverse(hmat)
    gens = [tuple(x - (x.numerator // x.denominator) for x in row) for row in inv]
    seen = {(Fraction(0),) * r}
    frontier = list(seen)
    while frontier:
        nxt = []
        for elem in frontier:
            for g in gens:
                new = tuple((a + b) % 1 for a, b in zip(elem, g))
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    if len(seen) != index:
        raise ConsistencyError(f"parallelepiped group has {len(seen)} elements, index is {index}")
    out = []
    for coeffs in seen:
        if all(c > 0 for c in coeffs):
            point = []
            for i in range(n):
                x = sum(c * g[i] for c, g in zip(coeffs, generators))
                if x.denominator != 1:
                    raise ConsistencyError("box point is not a lattice point")
                point.append(int(x))
            out.append(BoxPoint(tuple(point), point[-1], coeffs))
    out.sort(key=lambda b: b.point)
    return out


def box_polynomial(points):
    """``sum of t^height`` over box points (zero polynomial for an empty box)."""
    coeffs = defaultdict(int)
    for b in points:
        coeffs[b.height] += 1
    if not coeffs:
        return IntPolynomial()
    return IntPolynomial([coeffs[k] for k in range(max(coeffs) + 1)])


def choose_interior_point(P, l, largest=False):
    """Lexicographically smallest (or largest) interior lattice point of ``lP``."""
    pts = lattice_points(P, l, PointFilter.INTERIOR)
    if not pts:
        raise NoInteriorPoint(f"{l}P has no interior lattice point")
    return pts[-1] if largest else pts[0]


@dataclass(frozen=True)
class ConeData:
    """Box data of ``σ_F`` and ``σ'_F`` for one face, with its h-vector."""

    face: tuple
    generators: tuple
    apex: tuple
    box: tuple
    box_prime: tuple
    h: IntPolynomial

    @property
    def dim(self):
        return len(self.face) - 1

    @cached_property
    def B(self):
        return IntPolynomial([1]) if not self.face else box_polynomial(self.box)

    @cached_property
    def B_prime(self):
        return box_polynomial(self.box_prime)


def cone_data(T, vbar, l, face):
    gens = tuple(lift(T.points[i]) for i in face)
    apex = lift(vbar, l)
    box = tuple(box_points(gens, rank=T.d + 1))
    box_prime = tuple(box_points(gens + (apex,)))
    return ConeData(face, gens, apex, box, box_prime, h_vector(T, face))


def all_cone_data(T, vbar, l):
    key = ("cones", tuple(vbar), l)
    if key not in T._cache:
        T._cache[key] = [cone_data(T, vbar, l, face) for face in T.all_faces]
    return T._cache[key]


def decompose_via_triangulation(P, T, vbar, l):
    """Rebuild ``a = Σ B_F h_F`` and ``b = t^(-l) Σ B'_F h_F`` over all faces of ``T``."""
    a = IntPolynomial()
    shifted_b = IntPolynomial()
    for cd in all_cone_data(T, vbar, l):
        low = [bp for bp in cd.box_prime if bp.height < l]
        if low:
            raise ShiftUnderflow(f"face {cd.face}: box point {low[0].point} has height {low[0].height} < {l}")
        a = a + cd.B * cd.h
        shifted_b = shifted_b + cd.B_prime * cd.h
    return ABDecomposition(a, shifted_b.shift(-l), l, P.dim)


def lemma_ball_check(cd, l):
    """Palindromic box polynomials: degrees ``dim F + 1`` and ``dim F + l + 1``."""
    return cd.B.is_palindromic(cd.dim + 1) and cd.B_prime.is_palindromic(cd.dim + l + 1)


def upper_sum(T, vbar, l):
    """``Σ (B_F + B'_F) h_F`` over all faces."""
    total = IntPolynomial()
    for cd in all_cone_data(T, vbar, l):
        total = total + (cd.B + cd.B_prime) * cd.h
    return total


def lemma_upper_check(P, T, vbar, l, delta_bar):
    return upper_sum(T, vbar, l) == delta_bar


def is_unimodular(T):
    """Every maximal simplex has lattice index 1; checked against empty boxes of all non-empty faces."""
    by_index = all(simplex_index([T.points[i] for i in face]) == 1 for face in T.maximal_faces)
    by_boxes = all(
        not box_points([lift(T.points[i]) for i in face]) for face in T.all_faces if face
    )
    if by_index != by_boxes:
        raise ConsistencyError("determinant and box criteria for unimodularity disagree")
    return by_index


def summary(T):
    return {
        "vertices": len(T.points),
        "maximal_faces": len(T.maximal_faces),
        "f_vector": T.f_vector(),
        "unimodular": is_unimodular(T),
        "regular": "by construction" if T.regular else "regularity unchecked",
    }

