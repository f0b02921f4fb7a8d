"""Exception hierarchy.

Errors fall in two groups: input problems (bad files, degenerate polytopes,
enumeration limits) and internal-consistency failures, which signal that an
identity that must hold for every lattice polytope did not hold.  The CLI maps
the groups onto distinct exit codes.
"""


class EhrhartError(Exception):
    """Base class for all errors raised by this package."""


class PolytopeFormatError(EhrhartError, ValueError):
    """A polytope, triangulation or delta-vector document could not be parsed."""


class DegeneratePolytope(EhrhartError, ValueError):
    """The polytope does not have the dimension an operation requires."""


class EnumerationLimitExceeded(EhrhartError):
    """Lattice-point enumeration would scan more points than allowed."""

    def __init__(self, limit, scanned):
        super().__init__(
            f"lattice-point enumeration exceeded the cap of {limit} scanned points "
            f"(reached {scanned}); raise EHRHART_MAX_POINTS to allow it"
        )
        self.limit = limit
        self.scanned = scanned


class DimensionMismatch(EhrhartError, ValueError):
    """Operands live in lattices of incompatible rank."""


class DependentGenerators(EhrhartError, ValueError):
    """Cone generators are linearly dependent."""


class ConsistencyError(EhrhartError, AssertionError):
    """An identity that holds for all lattice polytopes was violated."""


class NegativeDeltaCoefficient(ConsistencyError):
    """A computed delta-vector has a negative entry."""


class ReciprocityViolation(ConsistencyError):
    """Interpolated Ehrhart values at negative arguments disagree with interior counts."""


class DecompositionInvariantViolation(ConsistencyError):
    """The symmetric decomposition failed one of its structural guarantees."""


class ShiftUnderflow(ConsistencyError):
    """A box point of an extended cone sits below the codegree height."""


class NoInteriorPoint(ConsistencyError):
    """The codegree dilate has no interior lattice point."""


class TataViolation(ConsistencyError):
    """Palindromicity, b = 0 and the reflexive-translate test disagree."""


class RouteMismatch(ConsistencyError):
    """The closed-form and triangulation decompositions differ."""
