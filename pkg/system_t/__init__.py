from system_t.arith import add_t, cmp_t, mul_t, sub_t
from system_t.conversion import hfseq_to_type, type_to_hfseq
from system_t.successor import (
    enumerate_t,
    iterate_t,
    pred_t,
    sp_infer,
    sp_step,
    succ_t,
    t2n,
)
from system_t.types import E, Direction, TType, arrow, parse_type, print_type

__all__ = [
    "TType",
    "E",
    "arrow",
    "Direction",
    "parse_type",
    "print_type",
    "succ_t",
    "pred_t",
    "sp_step",
    "sp_infer",
    "t2n",
    "iterate_t",
    "enumerate_t",
    "hfseq_to_type",
    "type_to_hfseq",
    "add_t",
    "mul_t",
    "sub_t",
    "cmp_t",
]
