from natseq.hfseq import EMPTY, ONE, HFSeq
from natseq.literal import format_hfseq, parse_hfseq
from natseq.pairing import (
    Nat,
    NatSeq,
    check_nat,
    cons_nat,
    hd_nat,
    is_null,
    list_to_nat,
    nat_bits,
    nat_to_list,
    tl_nat,
)
from natseq.ranking import (
    fits_nat,
    hfseq_to_nat,
    int_to_hfseq,
    nat_to_hfseq,
    rank,
    run_count,
    tree_value,
    unrank,
)

__all__ = [
    "EMPTY",
    "ONE",
    "HFSeq",
    "Nat",
    "NatSeq",
    "check_nat",
    "cons_nat",
    "hd_nat",
    "tl_nat",
    "is_null",
    "nat_bits",
    "nat_to_list",
    "list_to_nat",
    "nat_to_hfseq",
    "hfseq_to_nat",
    "fits_nat",
    "int_to_hfseq",
    "tree_value",
    "run_count",
    "rank",
    "unrank",
    "parse_hfseq",
    "format_hfseq",
]
