"""Finite field arithmetic."""

from affgrass.field.galois import (
    FieldSpec,
    field_from_order,
    fq_add,
    fq_div,
    fq_inv,
    fq_mul,
    fq_neg,
    fq_pow,
    fq_sub,
)

__all__ = [
    "FieldSpec",
    "field_from_order",
    "fq_add",
    "fq_div",
    "fq_inv",
    "fq_mul",
    "fq_neg",
    "fq_pow",
    "fq_sub",
]
