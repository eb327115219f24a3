"""Exact computations with multilinear cross products, Cayley algebras,
their automorphism groups and their group gradings."""

from .scalars import QQ, Field, FieldError, PrimeField, QuadraticExtension, parse_field
from .linalg import QuadSpace
from .cayley import CayleyAlgebra, CayleyElement, QuaternionAlgebra
from .crossprod import (
    CrossProduct, admissible_forms, build_c0, build_one_fold, build_quaternion_cross,
    build_star, build_three_fold, build_triple_3c, builtin, epsilon_identity,
    three_fold_type, verify_axioms,
)
from .abgroup import AbGroup, GroupElem, hom
from .gradings import Grading, classify_83, verify_grading

__all__ = [
    "QQ", "Field", "FieldError", "PrimeField", "QuadraticExtension", "parse_field", "QuadSpace",
    "CayleyAlgebra", "CayleyElement", "QuaternionAlgebra", "CrossProduct", "admissible_forms",
    "build_c0", "build_one_fold", "build_quaternion_cross", "build_star", "build_three_fold",
    "build_triple_3c", "builtin", "epsilon_identity", "three_fold_type", "verify_axioms",
    "AbGroup", "GroupElem", "hom", "Grading", "classify_83", "verify_grading",
]
