"""Ehrhart counts, delta-vectors, degree/codegree and the padded polynomial delta-bar."""

from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, NegativeDeltaCoefficient, ReciprocityViolation
from .geometry import PointFilter, count_lattice_points
from .polynomial import IntPolynomial, lagrange_evaluate


def ehrhart_counts(P, upto=None):
    """``[f_P(0), ..., f_P(upto)]`` by direct enumeration (``upto`` defaults to dim P)."""
    if upto is None:
        upto = P.dim
    return [count_lattice_points(P, m) for m in range(upto + 1)]


def delta_transform(values, exponent):
    """Numerator coefficients of ``sum_m values[m] t^m`` times ``(1 - t)^exponent``, truncated."""
    return [
        sum((-1) ** j * comb(exponent, j) * values[i - j] for j in range(min(i, exponent) + 1))
        for i in range(len(values))
    ]


def delta_vector(f, d):
    """The delta-polynomial from ``f = [f(0), ..., f(d)]``."""
    if len(f) != d + 1:
        raise ValueError(f"need {d + 1} Ehrhart values, got {len(f)}")
    if f[0] != 1:
        raise ValueError(f"f(0) must be 1, got {f[0]}")
    coeffs = delta_transform(f, d + 1)
    for i, c in enumerate(coeffs):
        if c < 0:
            raise NegativeDeltaCoefficient(f"delta_{i} = {c} < 0 for counts {f}")
    return IntPolynomial(coeffs)


def degree_codegree(delta, d):
    s = delta.degree
    if s < 0 or s > d:
        raise ValueError(f"delta {delta} is not a non-zero polynomial of degree <= {d}")
    return s, d + 1 - s


def geometric_codegree(P):
    """Least ``m >= 1`` such that ``mP`` has an interior lattice point."""
    for m in range(1, P.dim + 2):
        if count_lattice_points(P, m, PointFilter.INTERIOR):
            return m
    raise ConsistencyError(f"no interior lattice point in mP for m <= {P.dim + 1}")


def delta_bar(delta, l):
    if l < 1:
        raise ValueError("codegree must be positive")
    return IntPolynomial.geometric(l) * delta


@dataclass(frozen=True)
class EhrhartProfile:
    d: int
    f: tuple
    delta: IntPolynomial
    s: int
    l: int
    delta_bar: IntPolynomial

    def to_dict(self):
        return {
            "d": self.d,
            "f": list(self.f),
            "delta": self.delta.padded(self.d + 1),
            "s": self.s,
            "l": self.l,
            "delta_bar": self.delta_bar.padded(self.d + 1),
        }

    @classmethod
    def from_delta(cls, delta, d, f=()):
        """Profile of a bare delta-vector (no polytope); ``f`` is rebuilt from the series."""
        delta = IntPolynomial(delta) if not isinstance(delta, IntPolynomial) else delta
        s, l = degree_codegree(delta, d)
        if not f:
            f = tuple(delta.series(d + 1, d + 1))
        return cls(d, tuple(f), delta, s, l, delta_bar(delta, l))


def ehrhart_profile(P, validate=True):
    """Full profile of a full-dimensional polytope.

    With ``validate`` the profile is cross-checked against geometry: the
    codegree against the first dilate with an interior point, and
    ``delta_d`` against the interior count of ``P``.
    """
    d = P.dim
    f = ehrhart_counts(P)
    delta = delta_vector(f, d)
    s, l = degree_codegree(delta, d)
    dbar = delta_bar(delta, l)
    if dbar.degree != d or min(dbar.coeffs) < 1:
        raise ConsistencyError(f"delta-bar {dbar} must have degree {d} and positive coefficients")
    if validate and d > 0:
        if geometric_codegree(P) != l:
            raise ConsistencyError(f"codegree {l} from delta disagrees with interior-point search")
        if delta[d] != count_lattice_points(P, 1, PointFilter.INTERIOR):
            raise ConsistencyError("delta_d differs from the interior lattice-point count")
    return EhrhartProfile(d, tuple(f), delta, s, l, dbar)


def reciprocity_check(P, profile):
    """Compare interpolated ``f_P(-m)`` with ``(-1)^d`` times interior counts for m = 1..l."""
    d = profile.d
    for m in range(1, profile.l + 1):
        value = lagrange_evaluate(profile.f, -m)
        if value.denominator != 1:
            raise ReciprocityViolation(f"f_P({-m}) = {value} is not an integer")
        expected = (-1) ** d * count_lattice_points(P, m, PointFilter.INTERIOR)
        if value != expected:
            raise ReciprocityViolation(f"f_P({-m}) = {value}, expected {expected}")
    return True
