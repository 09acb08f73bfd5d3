"""Exact homological Euler characteristics of GL_m over Z, Z[i], Z[xi_3] and their Gamma_1 subgroups."""

from .eulerchar import (
    brown_sum,
    chi_h_aut_p,
    chi_h_gamma1_ring,
    chi_h_gamma1_z,
    chi_h_glm,
    phi,
    phi2,
    phi_ring,
)
from .reptrace import RepSpec, trace_rep, trace_sym
from .torsion import BlockDiagonalClass, GroupSpec, HypothesisViolation, torsion_catalog

__all__ = [
    "BlockDiagonalClass",
    "GroupSpec",
    "HypothesisViolation",
    "RepSpec",
    "brown_sum",
    "chi_h_aut_p",
    "chi_h_gamma1_ring",
    "chi_h_gamma1_z",
    "chi_h_glm",
    "phi",
    "phi2",
    "phi_ring",
    "torsion_catalog",
    "trace_rep",
    "trace_sym",
]
