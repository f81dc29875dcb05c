"""Exact verification of Capelli identities for see-saw dual pairs."""

from .cases import (
    capelli_Cd,
    iota_Xd,
    omega_bracket_check,
    verify_capelli_lemma,
    verify_degree_consistency,
    verify_h_invariance,
    verify_identity,
)
from .context import CaseContext, omega_E, omega_F, omega_G, omega_H
from .harmonics import (
    GradedSlice,
    Subspace,
    graded_kernel,
    gln_hwvs,
    intersection_decomposition,
    laplace_ops,
    nk_invariants,
    ta_component_dim,
    tensor_eta,
    tensor_gamma,
    verify_annihilation,
)
from .nclinalg import (
    cauchy_binet_check,
    column_det,
    index_sets,
    ishikawa_wakayama_check,
    pfaffian,
    submatrix,
)
from .partitions import compose, lr_coefficient, schur_product_oracle, weyl_dim
from .pbw import GLGen, PBWElement, h_basis, pbw_commutator, pbw_map_omega, pbw_mul
from .poly import Poly, VarId, column_multidegree, partial_derivative, poly_add, poly_mul
from .weyl import WeylOp, weyl_apply, weyl_commutator, weyl_equal, weyl_from_poly, weyl_mul

__version__ = "0.1.0"

__all__ = [
    "capelli_Cd",
    "CaseContext",
    "cauchy_binet_check",
    "column_det",
    "column_multidegree",
    "compose",
    "GLGen",
    "gln_hwvs",
    "graded_kernel",
    "GradedSlice",
    "h_basis",
    "index_sets",
    "intersection_decomposition",
    "iota_Xd",
    "ishikawa_wakayama_check",
    "laplace_ops",
    "lr_coefficient",
    "nk_invariants",
    "omega_bracket_check",
    "omega_E",
    "omega_F",
    "omega_G",
    "omega_H",
    "partial_derivative",
    "pbw_commutator",
    "pbw_map_omega",
    "pbw_mul",
    "PBWElement",
    "pfaffian",
    "Poly",
    "poly_add",
    "poly_mul",
    "schur_product_oracle",
    "submatrix",
    "Subspace",
    "ta_component_dim",
    "tensor_eta",
    "tensor_gamma",
    "VarId",
    "verify_annihilation",
    "verify_capelli_lemma",
    "verify_degree_consistency",
    "verify_h_invariance",
    "verify_identity",
    "weyl_apply",
    "weyl_commutator",
    "weyl_dim",
    "weyl_equal",
    "weyl_from_poly",
    "weyl_mul",
    "WeylOp",
]
