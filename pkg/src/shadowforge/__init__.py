"""Exact shadow characters for self-dual SVOAs, lattices and binary codes."""

from .codes import BinaryCode, code_shadow_weights, construction_a, weight_enumerator
from .lattice import (
    Coset,
    Lattice,
    characteristic_vectors,
    corollary_check,
    enumerate_by_norm,
    even_sublattice,
    lattice_character,
    shadow_theta,
    theta,
)
from .liedata import LieLabel, dim_simple, verify_table
from .modforms import chi8, chi_fermi_shadow, chi_half, eta, theta_e8, theta_z
from .qseries import QSeries
from .svoa import (
    CharacterPoly,
    ShadowReport,
    character,
    decompose,
    long_shadow_bounds,
    minimal_weight,
    shadow_character,
    shadow_deficit,
    strip_fermions,
    tensor,
    theorem1_check,
    three_term,
)

__all__ = [
    "BinaryCode",
    "code_shadow_weights",
    "construction_a",
    "weight_enumerator",
    "Coset",
    "Lattice",
    "characteristic_vectors",
    "corollary_check",
    "enumerate_by_norm",
    "even_sublattice",
    "lattice_character",
    "shadow_theta",
    "theta",
    "LieLabel",
    "dim_simple",
    "verify_table",
    "chi8",
    "chi_fermi_shadow",
    "chi_half",
    "eta",
    "theta_e8",
    "theta_z",
    "QSeries",
    "CharacterPoly",
    "ShadowReport",
    "character",
    "decompose",
    "long_shadow_bounds",
    "minimal_weight",
    "shadow_character",
    "shadow_deficit",
    "strip_fermions",
    "tensor",
    "theorem1_check",
    "three_term",
]

__version__ = "0.1.0"
