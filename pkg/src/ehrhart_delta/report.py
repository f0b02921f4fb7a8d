"""End-to-end analysis of one polytope or one bare delta-vector."""

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from . import inequalities
from .decomposition import (
    ABDecomposition,
    closed_form_coefficients,
    decompose_closed_form,
    decomposition_problems,
    delta_K_oracle,
)
from .ehrhart import EhrhartProfile, ehrhart_profile, reciprocity_check
from .errors import ConsistencyError, RouteMismatch
from .geometry import normalize_full_dimensional
from .polynomial import IntPolynomial
from .reflexive import stanley_symmetry_check
from . import triangulation as tri

ROUTES = ("closed", "triangulation", "both")

# families implied for every lattice polytope; the rest are conditional criteria
UNCONDITIONAL = frozenset(
    {
        inequalities.Family.HIBI_INEQ1,
        inequalities.Family.STANLEY_INEQ2,
        inequalities.Family.HIBI_LOWER_INEQ3,
        inequalities.Family.YOKE_I1,
        inequalities.Family.YOKE_I2,
        inequalities.Family.YOKE_I3,
        inequalities.Family.YOKE_I4,
        inequalities.Family.SUM_INEQ5,
    }
)
DWARF = frozenset({inequalities.Family.DWARF_CUATRO, inequalities.Family.DWARF_CINCO})


@dataclass
class RunReport:
    input: dict
    profile: Optional[EhrhartProfile] = None
    decomposition: Optional[dict] = None
    triangulation: Optional[dict] = None
    reflexivity: Optional[dict] = None
    inequalities: Optional[list] = None
    applicable: frozenset = frozenset()
    timing_ms: dict = field(default_factory=dict)

    def failures(self):
        if self.inequalities is None:
            return []
        return inequalities.gating_failures(self.inequalities, self.applicable)

    def to_dict(self, timing=False):
        out = {"input": self.input}
        if self.profile is not None:
            out["profile"] = self.profile.to_dict()
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition
        if self.triangulation is not None:
            out["triangulation"] = self.triangulation
        if self.reflexivity is not None:
            out["reflexivity"] = self.reflexivity
        if self.inequalities is not None:
            out["inequalities"] = [
                dict(r.to_dict(), applicable=r.family in self.applicable) for r in self.inequalities
            ]
        if timing:
            out["timing_ms"] = self.timing_ms
        return out


@contextmanager
def _timed(sink, name):
    start = time.perf_counter()
    yield
    sink[name] = round((time.perf_counter() - start) * 1000, 3)


def analyze_polytope(
    P,
    route="both",
    triangulation_doc=None,
    stages=("profile", "decomposition", "reflexivity", "inequalities"),
    source=None,
):
    """Run the requested stages on a polytope and collect a :class:`RunReport`.

    Raises :class:`RouteMismatch` when both decomposition routes run and
    disagree, and other :class:`ConsistencyError` subclasses when an identity
    that holds for every lattice polytope fails.
    """
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}")
    Q, amap = normalize_full_dimensional(P)
    report = RunReport(
        input={
            "source": source,
            "rank": P.rank,
            "dimension": Q.dim,
            "vertices": [list(v) for v in Q.vertices],
            "normalized": not amap.is_identity,
        }
    )
    with _timed(report.timing_ms, "profile"):
        profile = ehrhart_profile(Q)
        reciprocity_check(Q, profile)
    report.profile = profile
    d, l = profile.d, profile.l
    closed = None
    if any(s in stages for s in ("decomposition", "reflexivity")):
        closed = decompose_closed_form(profile.delta, d, profile.s, l)
    if "decomposition" in stages:
        section = {"route": route}
        if route in ("closed", "both"):
            section["closed"] = closed.to_dict()
        if route in ("triangulation", "both") and d >= 1:
            with _timed(report.timing_ms, "triangulation"):
                if triangulation_doc is not None:
                    T = tri.triangulation_from_dict(triangulation_doc, Q)
                else:
                    T = tri.triangulate_boundary(Q)
                vbar = tri.choose_interior_point(Q, l)
                via = tri.decompose_via_triangulation(Q, T, vbar, l)
                upper_ok = tri.lemma_upper_check(Q, T, vbar, l, profile.delta_bar)
                report.triangulation = dict(tri.summary(T), interior_point=list(vbar))
            section["triangulation"] = via.to_dict()
            section["upper_identity"] = upper_ok
            if not upper_ok:
                raise ConsistencyError("sum of (B_F + B'_F) h_F differs from delta-bar")
            if route == "both":
                agree = via == closed
                section["routes_agree"] = agree
                if not agree:
                    raise RouteMismatch(f"closed form {closed} vs triangulation {via}")
        elif route in ("triangulation", "both"):
            section["triangulation"] = None
        with _timed(report.timing_ms, "pyramid_oracle"):
            dk = delta_K_oracle(Q)
        section["pyramid_delta"] = dk.padded(d + 1)
        section["pyramid_matches_a"] = dk == closed.a
        if dk != closed.a:
            raise ConsistencyError(f"pyramid delta {dk} differs from a = {closed.a}")
        report.decomposition = section
    if "reflexivity" in stages:
        with _timed(report.timing_ms, "reflexivity"):
            report.reflexivity = dict(stanley_symmetry_check(Q, profile, closed).to_dict(), dilate=l)
    if "inequalities" in stages:
        report.inequalities = inequalities.audit(profile.delta.padded(d + 1), d, profile.s, l)
        applicable = set(UNCONDITIONAL)
        if report.triangulation is not None and report.triangulation["unimodular"]:
            applicable |= DWARF
        report.applicable = frozenset(applicable)
    return report


def analyze_delta(coeffs, d):
    """Audit a bare vector; decomposition guarantees are reported, never enforced."""
    delta = IntPolynomial(coeffs)
    if delta.is_zero() or delta.degree > d:
        raise ValueError(f"delta-vector must be non-zero with degree <= {d}")
    profile = EhrhartProfile.from_delta(delta, d)
    a, b = closed_form_coefficients(delta, d)
    dec = ABDecomposition(IntPolynomial(a), IntPolynomial(b), profile.l, d)
    problems = decomposition_problems(dec, profile.delta_bar)
    report = RunReport(input={"source": "literal", "delta": list(coeffs), "dimension": d})
    report.profile = profile
    report.decomposition = dict(route="closed", closed=dec.to_dict(), problems=problems)
    report.inequalities = inequalities.audit(list(coeffs), d, profile.s, profile.l)
    report.applicable = UNCONDITIONAL
    return report
