"""Exact integer and rational linear algebra on small dense matrices.

Matrices are sequences of rows; vectors are tuples.  Nothing here touches
floating point.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DependentGenerators


def primitive(vec):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def det(rows):
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def row_echelon(rows):
    """Reduced row echelon form over the rationals; returns (rref rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(row_echelon(rows)[1])


def affine_rank(points):
    """Dimension of the affine hull of a non-empty point set."""
    points = list(points)
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def independent_subset(vectors):
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen = []
    basis = []
    for i, v in enumerate(vectors):
        if rank(basis + [v]) > len(basis):
            basis.append(v)
            chosen.append(i)
    return chosen


def solve(columns, target):
    """Exact coefficients c with sum(c[i] * columns[i]) == target.

    ``columns`` must be linearly independent.  Returns ``None`` when the target
    is outside their span.
    """
    k = len(columns)
    if k == 0:
        return () if all(x == 0 for x in target) else None
    n = len(target)
    augmented = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    rref, pivots = row_echelon(augmented)
    if pivots and pivots[-1] == k:
        return None
    if len(pivots) < k:
        raise DependentGenerators("columns are linearly dependent")
    return tuple(rref[i][k] for i in range(k))


def normal_vector(vectors, n):
    """Primitive integer normal to ``n - 1`` vectors in Z^n (generalised cross product).

    Returns the zero vector when the vectors are dependent.
    """
    normal = []
    for j in range(n):
        minor = [[v[c] for c in range(n) if c != j] for v in vectors]
        normal.append((-1) ** j * det(minor))
    return primitive(normal)


def maximal_minor_gcd(rows):
    """Gcd of the maximal minors of an r x n integer matrix with r <= n.

    For independent rows this is the index of the lattice they span inside its
    saturation.
    """
    r = len(rows)
    if r == 0:
        return 1
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), r):
        g = gcd(g, det([[row[c] for c in cols] for row in rows]))
        if g == 1:
            break
    return g


def _xgcd(a, b):
    """Return (g, x, y) with g = a*x + b*y = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_hermite(rows):
    """Column-style Hermite reduction of a full-row-rank integer matrix.

    Finds a unimodular ``U`` with ``rows @ U == [H | 0]``, ``H`` square lower
    triangular with positive diagonal.  Returns ``(H, U, U_inv)``.  The first
    ``r`` rows of ``U_inv`` form a basis of the saturated lattice
    ``span(rows) ∩ Z^n`` and ``rows == H @ U_inv[:r]``.
    """
    r = len(rows)
    n = len(rows[0]) if r else 0
    a = [list(row) for row in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    uinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_combine(i, j, p, q, s, t):
        # new col_i = p*col_i + q*col_j ; new col_j = s*col_i + t*col_j  (det = 1)
        for mat in (a, u):
            for row in mat:
                ci, cj = row[i], row[j]
                row[i] = p * ci + q * cj
                row[j] = s * ci + t * cj
        # inverse acts on rows: [[t, -q], [-s, p]] applied to rows i, j
        ri, rj = uinv[i], uinv[j]
        uinv[i] = [t * x - s * y for x, y in zip(ri, rj)]
        uinv[j] = [-q * x + p * y for x, y in zip(ri, rj)]

    for k in range(r):
        for j in range(k + 1, n):
            x, y = a[k][k], a[k][j]
            if y == 0:
                continue
            g, p, q = _xgcd(x, y)
            col_combine(k, j, p, q, -y // g, x // g)
        if a[k][k] == 0:
            raise DependentGenerators("rows are linearly dependent")
        if a[k][k] < 0:
            for mat in (a, u):
                for row in mat:
                    row[k] = -row[k]
            uinv[k] = [-x for x in uinv[k]]
    h = [tuple(a[i][:r]) for i in range(r)]
    return h, [tuple(row) for row in u], [tuple(row) for row in uinv]
