"""Dense integer polynomials in one variable ``t``."""

from fractions import Fraction
from math import comb


class IntPolynomial:
    """Immutable polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients and
    degree -1.

    >>> p = IntPolynomial([1, 2]) * IntPolynomial([1, 0, 1])
    >>> p.coeffs
    (1, 2, 1, 2)
    >>> p.degree
    3
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def geometric(cls, n):
        """``1 + t + ... + t^(n-1)``."""
        return cls([1] * n)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def padded(self, length):
        """Coefficient list of the given length (truncating nothing non-zero)."""
        if length < len(self.coeffs):
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = str(c)
            else:
                power = "t" if i == 1 else f"t^{i}"
                mono = power if c == 1 else f"-{power}" if c == -1 else f"{c}{power}"
            terms.append(mono)
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t^k``; negative ``k`` requires the low coefficients to vanish."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise ValueError(f"cannot divide {self} by t^{-k}")
        return IntPolynomial(self.coeffs[-k:])

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_palindromic(self, degree):
        """True iff ``p(t) == t^degree * p(1/t)`` (the zero polynomial always is)."""
        if not self.coeffs:
            return True
        if self.degree > degree:
            return False
        padded = self.padded(degree + 1)
        return padded == padded[::-1]

    def is_unimodal(self, upto=None):
        """Weakly increasing coefficients up to index ``upto`` (default: the middle)."""
        if upto is None:
            upto = self.degree // 2
        return all(self[i] <= self[i + 1] for i in range(upto))

    def series(self, denominator_power, order):
        """First ``order`` coefficients of ``self / (1 - t)^denominator_power``."""
        if denominator_power == 0:
            return [self[m] for m in range(order)]
        out = []
        for m in range(order):
            out.append(
                sum(
                    self[j] * comb(m - j + denominator_power - 1, denominator_power - 1)
                    for j in range(min(m, self.degree) + 1)
                )
            )
        return out

    def to_list(self):
        return list(self.coeffs)


def _coerce(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


def lagrange_evaluate(values, x):
    """Value at ``x`` of the polynomial of degree < len(values) through (i, values[i])."""
    n = len(values)
    total = Fraction(0)
    for i, y in enumerate(values):
        term = Fraction(y)
        for j in range(n):
            if j != i:
                term *= Fraction(x - j, i - j)
        total += term
    return total
