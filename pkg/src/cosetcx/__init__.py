"""Coset complexes of finite groups and finite-index tools for finitely presented groups."""

from .caps import Caps, current_caps, parse_caps
from .complex import HomologyProfile, SimplicialComplex, coset_simplicial, homology, nerve_complex, order_complex
from .errors import CosetError, OverCap, Overflow, ParseError
from .families import SubgroupFamily, cosets_of_family, family_all_proper, family_normal_proper, maximal_subfamily
from .groups import FiniteGroup, Subgroup, build_group
from .wedge import WedgeDescriptor, predict_normal_wedge
from .zeta import bouc_check, eval_P, hall_series, moebius_table

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "CosetError",
    "FiniteGroup",
    "HomologyProfile",
    "OverCap",
    "Overflow",
    "ParseError",
    "SimplicialComplex",
    "Subgroup",
    "SubgroupFamily",
    "WedgeDescriptor",
    "bouc_check",
    "build_group",
    "coset_simplicial",
    "cosets_of_family",
    "current_caps",
    "eval_P",
    "family_all_proper",
    "family_normal_proper",
    "hall_series",
    "homology",
    "maximal_subfamily",
    "moebius_table",
    "nerve_complex",
    "order_complex",
    "parse_caps",
    "predict_normal_wedge",
]
