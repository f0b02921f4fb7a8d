"""Exact Ehrhart delta-vectors of lattice polytopes and the a/b decomposition of delta-bar."""

from .constructions import example_cual, henk_tagami_tensor, pyramid, standard_reflexive_simplex, standard_simplex, unit_cube
from .decomposition import ABDecomposition, decompose_closed_form, delta_K_oracle
from .ehrhart import EhrhartProfile, delta_vector, ehrhart_profile
from .geometry import LatticePolytope, lattice_points, normalize_full_dimensional
from .inequalities import Family, audit
from .report import analyze_delta, analyze_polytope
from .triangulation import decompose_via_triangulation, triangulate_boundary

__version__ = "0.1.0"
