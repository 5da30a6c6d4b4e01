"""Exact chamber geometry of movable cones.

For a Calabi-Yau complete intersection of multidegree-(1,...,1)
hypersurfaces in an m-fold product of n-dimensional projective spaces,
the birational automorphisms act on divisor classes through a reflection
group.  This package builds that representation in exact rational
arithmetic, enumerates the chamber decomposition of the movable cone,
classifies divisor classes to marked minimal models, and computes the
cone boundary over the relevant quadratic number field.

The matrix group computed here represents the birational automorphisms
modulo the finite automorphism kernel, which acts trivially on divisor
classes for a general member of the family.
"""

from .atlas import (BoundaryPatch, Chamber, ClassificationError,
                    ClassificationResult, boundary_patches, classify,
                    enumerate_chambers, fundamental_domain, isotropy_value,
                    project_affine, reduced_words, word_matrix)
from .bir import (BudgetError, EigenPair, FreeReport, GroupElementNF,
                  PairClass, PsiWord, aut_codimension, eigen_pair,
                  flop_pullback, free_reduce, prefix_check, psi_from_t,
                  psi_matrix, psi_word_matrix, swap_identity_holds,
                  t_normal_form, verify_free)
from .coxeter import (CoxeterSystem, Permutation, build_system,
                      dual_reflection_from_gram, perm_matrix,
                      reflection_from_gram)
from .exact import QuadExt, quad_roots, sqrt_exact, squarefree_decompose
from .linalg import (Matrix, dot, nullspace_vector, primitive_int_vector,
                     primitive_quad_vector)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPatch", "BudgetError", "Chamber", "ClassificationError",
    "ClassificationResult", "CoxeterSystem", "EigenPair", "FreeReport",
    "GroupElementNF", "Matrix", "PairClass", "Permutation", "PsiWord",
    "QuadExt", "aut_codimension", "boundary_patches", "build_system",
    "classify", "dot", "dual_reflection_from_gram", "eigen_pair",
    "enumerate_chambers", "flop_pullback", "free_reduce",
    "fundamental_domain", "isotropy_value", "nullspace_vector",
    "perm_matrix", "prefix_check", "primitive_int_vector",
    "primitive_quad_vector", "project_affine", "psi_from_t", "psi_matrix",
    "psi_word_matrix", "quad_roots", "reduced_words",
    "reflection_from_gram", "sqrt_exact", "squarefree_decompose",
    "swap_identity_holds", "t_normal_form", "verify_free", "word_matrix",
]
