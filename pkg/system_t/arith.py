"""Arithmetic on types by composition: convert to HFSeq, operate, convert back."""

from __future__ import annotations

from hfs_arith.operations import Ordering, add, cmp, mul, sub
from .conversion import hfseq_to_type, type_to_hfseq
from .types import TType


def add_t(x: TType, y: TType) -> TType:
    return hfseq_to_type(add(type_to_hfseq(x), type_to_hfseq(y)))


def mul_t(x: TType, y: TType) -> TType:
    return hfseq_to_type(mul(type_to_hfseq(x), type_to_hfseq(y)))


def sub_t(x: TType, y: TType) -> TType:
    """Raises UnderflowError when x encodes a smaller number than y."""
    return hfseq_to_type(sub(type_to_hfseq(x), type_to_hfseq(y)))


def cmp_t(x: TType, y: TType) -> Ordering:
    return cmp(type_to_hfseq(x), type_to_hfseq(y))
