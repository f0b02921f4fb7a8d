"""Reflexivity and the equivalence between palindromic delta-vectors and reflexive dilates."""

from dataclasses import dataclass
from typing import Optional

from .errors import TataViolation
from .geometry import PointFilter, lattice_points, locate, PointLocation


def is_reflexive(P):
    """Origin is the only interior lattice point and every facet sits at lattice distance one."""
    origin = (0,) * P.rank
    if locate(P, origin) is not PointLocation.INTERIOR:
        return False
    if lattice_points(P, 1, PointFilter.INTERIOR) != [origin]:
        return False
    return all(f.offset == 1 for f in P.facets)


def is_translate_of_reflexive(P):
    """``(True, w)`` when ``P - w`` is reflexive for the unique interior lattice point ``w``."""
    interior = lattice_points(P, 1, PointFilter.INTERIOR)
    if len(interior) != 1:
        return False, None
    w = interior[0]
    if is_reflexive(P.translated(w)):
        return True, w
    return False, None


@dataclass(frozen=True)
class ReflexivityReport:
    is_reflexive: bool
    is_translate_of_reflexive: bool
    translation: Optional[tuple]
    delta_symmetric: bool
    b_is_zero: bool

    def to_dict(self):
        return {
            "is_reflexive": self.is_reflexive,
            "codegree_dilate_is_translate_of_reflexive": self.is_translate_of_reflexive,
            "translation": list(self.translation) if self.translation is not None else None,
            "delta_symmetric": self.delta_symmetric,
            "b_is_zero": self.b_is_zero,
        }


def stanley_symmetry_check(P, profile, decomposition):
    """Check that ``delta`` palindromic in degree ``s``, ``b = 0`` and ``lP`` reflexive up to translation agree."""
    symmetric = profile.delta.is_palindromic(profile.s)
    b_zero = decomposition.b.is_zero()
    translate, w = is_translate_of_reflexive(P.scaled(profile.l))
    if not symmetric == b_zero == translate:
        raise TataViolation(
            f"delta symmetric: {symmetric}, b = 0: {b_zero}, {profile.l}P reflexive translate: {translate}"
        )
    return ReflexivityReport(is_reflexive(P), translate, w, symmetric, b_zero)


def unique_boundary_layer(P, m):
    """For each non-zero lattice point of ``mP``, the dilates ``n <= m`` whose boundary contains it.

    Returns the points for which that set does not have exactly one element;
    empty for reflexive ``P``.
    """
    offenders = []
    origin = (0,) * P.rank
    for x in lattice_points(P, m):
        if x == origin:
            continue
        layers = [n for n in range(1, m + 1) if locate(P, x, n) is PointLocation.BOUNDARY]
        if len(layers) != 1:
            offenders.append((x, layers))
    return offenders
