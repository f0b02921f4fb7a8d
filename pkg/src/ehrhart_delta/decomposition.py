"""The symmetric decomposition ``delta_bar = a(t) + t^l b(t)``.

``a`` is palindromic of degree ``d`` and ``b`` palindromic of degree
``d - l``.  Both are written down directly from the delta-vector by partial
sums; the triangulation module rebuilds them geometrically and
:func:`delta_K_oracle` recovers ``a`` a third way, from boundary counts of
dilates.
"""

from dataclasses import dataclass

from . import linalg
from .ehrhart import delta_bar as make_delta_bar
from .ehrhart import delta_transform
from .errors import DecompositionInvariantViolation
from .geometry import PointFilter, count_lattice_points
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class ABDecomposition:
    a: IntPolynomial
    b: IntPolynomial
    l: int
    d: int

    def to_dict(self):
        return {"a": self.a.padded(self.d + 1), "b": self.b.to_list(), "l": self.l}

    def recombine(self):
        return self.a + self.b.shift(self.l)


def _prefix(delta, lo, hi):
    """``delta_lo + ... + delta_hi`` with out-of-range indices read as zero."""
    return sum(delta[j] for j in range(max(lo, 0), hi + 1))


def closed_form_coefficients(delta, d):
    """Coefficient lists of ``a`` and ``b`` for an arbitrary vector, with no checks.

    ``a_{i+1} = (delta_0 + ... + delta_{i+1}) - (delta_d + ... + delta_{d-i})``
    and ``b_i = (delta_s + ... + delta_{s-i}) - (delta_0 + ... + delta_i)``.
    """
    s = delta.degree
    l = d + 1 - s
    a = [_prefix(delta, 0, i) - _prefix(delta, d - i + 1, d) for i in range(d + 1)]
    b = [_prefix(delta, s - i, s) - _prefix(delta, 0, i) for i in range(d - l + 1)]
    return a, b


def decompose_closed_form(delta, d, s=None, l=None):
    """Decompose the delta-bar polynomial of a delta-vector, asserting the structural guarantees."""
    if s is None:
        s = delta.degree
    if l is None:
        l = d + 1 - s
    if s != delta.degree or s + l != d + 1:
        raise ValueError(f"inconsistent degree/codegree ({s}, {l}) for {delta} in dimension {d}")
    a, b = closed_form_coefficients(delta, d)
    result = ABDecomposition(IntPolynomial(a), IntPolynomial(b), l, d)
    problems = decomposition_problems(result, make_delta_bar(delta, l))
    if problems:
        raise DecompositionInvariantViolation("; ".join(problems))
    return result


def decomposition_problems(dec, delta_bar):
    """Failed guarantees of a decomposition, as human-readable strings (empty when sound)."""
    a, b, l, d = dec.a, dec.b, dec.l, dec.d
    problems = []
    if dec.recombine() != delta_bar:
        problems.append(f"a + t^{l} b = {dec.recombine()} differs from delta-bar {delta_bar}")
    if not a.is_palindromic(d) or a.degree != d:
        problems.append(f"a = {a} is not palindromic of degree {d}")
    if not b.is_palindromic(d - l):
        problems.append(f"b = {b} is not palindromic of degree {d - l}")
    if any(c < 0 for c in b):
        problems.append(f"b = {b} has a negative coefficient")
    if a[0] != 1:
        problems.append(f"a_0 = {a[0]} is not 1")
    if d >= 1 and a[1] < a[0]:
        problems.append(f"a_1 = {a[1]} < a_0")
    for i in range(2, d):
        if a[i] < a[1]:
            problems.append(f"a_{i} = {a[i]} < a_1 = {a[1]}")
    return problems


def verify_uniqueness(delta_bar, d, l, candidate, delta):
    """True iff ``candidate`` is the decomposition determined by ``delta``.

    The candidate must already satisfy both symmetry constraints and sum to
    ``delta_bar``; otherwise it is not a solution at all and ``False`` is
    returned.
    """
    if candidate.recombine() != delta_bar:
        return False
    if not candidate.a.is_palindromic(d) or not candidate.b.is_palindromic(d - l):
        return False
    a, b = closed_form_coefficients(delta, d)
    return candidate.a == IntPolynomial(a) and candidate.b == IntPolynomial(b)


def solve_symmetric_system(delta_bar, d, l):
    """Solve ``a + t^l b = delta_bar`` with both palindromic constraints by exact elimination.

    Independent of the closed form.  Returns ``(a, b, unique)`` with integer
    coefficient lists for the particular solution (free variables set to
    zero), or ``None`` if the system is inconsistent or has a non-integral
    solution.
    """
    nb = d - l + 1
    nvars = d + 1 + nb
    rows, rhs = [], []
    for i in range(d + 1):
        row = [0] * nvars
        row[i] = 1
        if 0 <= i - l < nb:
            row[d + 1 + i - l] = 1
        rows.append(row)
        rhs.append(delta_bar[i])
    for i in range(d + 1):
        row = [0] * nvars
        row[i] += 1
        row[d - i] -= 1
        rows.append(row)
        rhs.append(0)
    for j in range(nb):
        row = [0] * nvars
        row[d + 1 + j] += 1
        row[d + 1 + nb - 1 - j] -= 1
        rows.append(row)
        rhs.append(0)
    rref, pivots = linalg.row_echelon([r + [c] for r, c in zip(rows, rhs)])
    if pivots and pivots[-1] == nvars:
        return None
    solution = [0] * nvars
    for r, c in zip(rref, pivots):
        solution[c] = r[nvars]
    if any(x.denominator != 1 for x in solution if not isinstance(x, int)):
        return None
    solution = [int(x) for x in solution]
    return solution[: d + 1], solution[d + 1 :], len(pivots) == nvars


def delta_K_oracle(P):
    """Delta-polynomial of the pyramid over the boundary of ``P``.

    ``f_K(m) = 1 + sum_{k=1..m} |boundary of kP ∩ Z^n|`` for m = 0..d+1,
    then the transform with exponent ``d + 1``.  The coefficient at
    ``t^(d+1)`` must vanish.
    """
    d = P.dim
    f_k = [1]
    for m in range(1, d + 2):
        f_k.append(f_k[-1] + count_lattice_points(P, m, PointFilter.BOUNDARY))
    coeffs = delta_transform(f_k, d + 1)
    if coeffs[-1] != 0:
        raise DecompositionInvariantViolation(f"pyramid series has a t^{d + 1} term: {coeffs}")
    return IntPolynomial(coeffs)


def unimodality_bridge(delta, d):
    """Gaps ``a_{i+1} - a_i`` for i < d // 2, computed two ways and required to agree."""
    a, _ = closed_form_coefficients(delta, d)
    gaps = []
    for i in range(d // 2):
        direct = a[i + 1] - a[i]
        via_delta = delta[i + 1] - delta[d - i]
        if direct != via_delta:
            raise DecompositionInvariantViolation(
                f"a-gap {direct} at {i} differs from delta_{i + 1} - delta_{d - i} = {via_delta}"
            )
        gaps.append(direct)
    return gaps
