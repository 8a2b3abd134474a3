"""Exact computations in tensor powers of free graded-commutative algebras."""

from .algebra import Algebra, Element, FactorMonomial, Generator, TensorWord, add, normalize_factor, scale
from .errors import ArityError, ContextError, FieldMismatchError, GradedTensorError, IdealError
from .ideals import MonomialIdeal, chain_ideal, congruent, divides, ideal_contains, reduce
from .lemmas import (
    TermRecord,
    VerificationReport,
    certificate,
    check_original_first_part,
    residual_profile,
    verify,
    verify_corrected_first_part,
    verify_second_part,
)
from .products import chain_product, embed, mul, word_sign, zero_divisor
from .scalars import GF, QQ, Field, Scalar, parse_field

__all__ = [
    "Algebra", "ArityError", "ContextError", "Element", "FactorMonomial", "Field", "FieldMismatchError",
    "GF", "Generator", "GradedTensorError", "IdealError", "MonomialIdeal", "QQ", "Scalar", "TensorWord",
    "TermRecord", "VerificationReport", "add", "certificate", "chain_ideal", "chain_product",
    "check_original_first_part", "congruent", "divides", "embed", "ideal_contains", "mul",
    "normalize_factor", "parse_field", "reduce", "residual_profile", "scale", "verify",
    "verify_corrected_first_part", "verify_second_part", "word_sign", "zero_divisor",
]
