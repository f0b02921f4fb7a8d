"""Inequality families for delta-vectors, evaluated with witnesses.

Every check accepts a bare coefficient vector, so candidate vectors that do
not come from a polytope can be screened too.  Indices outside ``0..d`` read
as zero.
"""

import enum
from dataclasses import dataclass
from math import comb
from typing import Optional


class Family(enum.Enum):
    HIBI_INEQ1 = "Hibi_ineq1"
    STANLEY_INEQ2 = "Stanley_ineq2"
    HIBI_LOWER_INEQ3 = "HibiLower_ineq3"
    YOKE_I1 = "Yoke_I1"
    YOKE_I2 = "Yoke_I2"
    YOKE_I3 = "Yoke_I3"
    YOKE_I4 = "Yoke_I4"
    SUM_INEQ5 = "Sum_ineq5"
    ATHANASIADIS_UN = "Athanasiadis_un"
    ATHANASIADIS_MID = "Athanasiadis_mid"
    ATHANASIADIS_UBT = "Athanasiadis_UBT"
    DWARF_CUATRO = "Dwarf_cuatro"
    DWARF_CINCO = "Dwarf_cinco"
    # lower bound delta_1 <= delta_i for i < s when delta_d = 0; known to fail, never gates exit codes
    HENK_TAGAMI_ANALOGUE = "HenkTagami_analogue"


@dataclass(frozen=True)
class InequalityReport:
    family: Family
    holds: bool
    first_violation: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    vacuous: bool = False
    informational: bool = False
    equality: bool = False

    def to_dict(self):
        out = {"family": self.family.value, "holds": self.holds}
        if not self.holds:
            out.update(first_violation=self.first_violation, lhs=self.lhs, rhs=self.rhs)
        if self.vacuous:
            out["vacuous"] = True
        if self.informational:
            out["informational"] = True
        out["equality"] = self.equality
        return out


class _Vector:
    def __init__(self, delta, d):
        self.values = list(delta)
        self.d = d
        if len(self.values) > d + 1 and any(self.values[d + 1 :]):
            raise ValueError(f"delta-vector {self.values} is longer than d + 1 = {d + 1}")

    def __getitem__(self, i):
        if 0 <= i <= self.d and i < len(self.values):
            return self.values[i]
        return 0

    def sum(self, lo, hi):
        return sum(self[j] for j in range(lo, hi + 1))

    @property
    def degree(self):
        nz = [i for i in range(self.d + 1) if self[i]]
        return nz[-1] if nz else -1


def binom(n, k):
    """Binomial coefficient, zero for ``k < 0``, ``n < 0`` or ``n < k``; ``C(n, 0) = 1``."""
    if k == 0:
        return 1
    if k < 0 or n < 0 or n < k:
        return 0
    return comb(n, k)


def _audit(family, pairs, kind="le"):
    """``pairs`` yields ``(index, lhs, rhs)``; the family holds when every ``lhs <= rhs`` (or ``>=``)."""
    equality = True
    for i, lhs, rhs in pairs:
        ok = lhs <= rhs if kind == "le" else lhs >= rhs
        if not ok:
            return InequalityReport(family, False, i, lhs, rhs)
        equality = equality and lhs == rhs
    return InequalityReport(family, True, equality=equality)


def check_yoke(delta, d, s=None, l=None):
    v = _Vector(delta, d)
    if s is None:
        s = v.degree
    if l is None:
        l = d + 1 - s
    return [
        _audit(Family.YOKE_I1, [(1, v[1], v[d])], "ge"),
        _audit(
            Family.YOKE_I2,
            ((i, v.sum(2, i + 1), v.sum(d - i, d - 1)) for i in range(d // 2)),
            "ge",
        ),
        _audit(Family.YOKE_I3, ((i, v.sum(0, i), v.sum(s - i, s)) for i in range(d + 1))),
        _audit(Family.YOKE_I4, ((i, v.sum(2 - l, 1), v.sum(i - l + 1, i)) for i in range(2, d))),
    ]


def check_classical(delta, d, s=None):
    v = _Vector(delta, d)
    if s is None:
        s = v.degree
    reports = [
        _audit(
            Family.HIBI_INEQ1,
            ((i, v.sum(0, i + 1), v.sum(d - i, d)) for i in range(d // 2)),
            "ge",
        ),
        _audit(Family.STANLEY_INEQ2, ((i, v.sum(0, i), v.sum(s - i, s)) for i in range(d + 1))),
    ]
    if v[d] != 0:
        lower = [(1, 1, v[1])] + [(i, v[1], v[i]) for i in range(2, d)]
        reports.append(_audit(Family.HIBI_LOWER_INEQ3, lower))
    else:
        reports.append(InequalityReport(Family.HIBI_LOWER_INEQ3, True, vacuous=True))
    reports.append(
        _audit(
            Family.SUM_INEQ5,
            ((i, v.sum(1, i + 1), v.sum(d - i, d)) for i in range(d // 2)),
            "ge",
        )
    )
    if v[d] == 0:
        analogue = _audit(Family.HENK_TAGAMI_ANALOGUE, ((i, v[1], v[i]) for i in range(2, s)))
        reports.append(
            InequalityReport(
                analogue.family,
                analogue.holds,
                analogue.first_violation,
                analogue.lhs,
                analogue.rhs,
                informational=True,
                equality=analogue.equality,
            )
        )
    return reports


def check_dwarf(delta, d):
    v = _Vector(delta, d)
    return [
        _audit(Family.DWARF_CUATRO, ((i, v[i + 1], v[d - i]) for i in range(d // 2)), "ge"),
        _audit(
            Family.DWARF_CINCO,
            (
                (i, v.sum(0, i + 1), v.sum(d - i, d) + binom(v[1] - v[d] + i + 1, i + 1))
                for i in range(d // 2)
            ),
        ),
    ]


def check_athanasiadis(delta, d):
    v = _Vector(delta, d)
    middle = (d + 1) // 2
    return [
        _audit(Family.ATHANASIADIS_UN, ((i, v[i + 1], v[d - i]) for i in range(d // 2)), "ge"),
        _audit(Family.ATHANASIADIS_MID, ((i, v[i], v[i + 1]) for i in range(middle, d)), "ge"),
        _audit(Family.ATHANASIADIS_UBT, ((i, v[i], binom(v[1] + i - 1, i)) for i in range(d + 1))),
    ]


def audit(delta, d, s=None, l=None):
    """All families in a fixed order."""
    return (
        check_classical(delta, d, s)
        + check_yoke(delta, d, s, l)
        + check_dwarf(delta, d)
        + check_athanasiadis(delta, d)
    )


def by_family(reports):
    return {r.family: r for r in reports}


def gating_failures(reports, families=None):
    """Reports that fail and count toward a non-zero exit status."""
    return [
        r
        for r in reports
        if not r.holds and not r.informational and (families is None or r.family in families)
    ]
