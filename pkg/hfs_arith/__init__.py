from hfs_arith.bijective import (
    BigDigitSeq,
    Parity,
    bijective_digits,
    from_bijective_digits,
    from_nat,
    mk_even,
    mk_odd,
    parity,
    r_dtor,
    to_nat,
)
from hfs_arith.decimal_io import from_decimal, to_decimal, validate_decimal
from hfs_arith.operations import Ordering, add, cmp, mul, mul0, pow, sub
from hfs_arith.slow import (
    enumerate_hfseq,
    iterate_hfseq,
    nat_to_tree_slow,
    slow_add,
    tree_to_nat_slow,
)
from hfs_arith.successor import pred, succ

__all__ = [
    "succ",
    "pred",
    "Parity",
    "parity",
    "mk_odd",
    "mk_even",
    "r_dtor",
    "BigDigitSeq",
    "bijective_digits",
    "from_bijective_digits",
    "to_nat",
    "from_nat",
    "Ordering",
    "add",
    "mul",
    "mul0",
    "cmp",
    "sub",
    "pow",
    "slow_add",
    "tree_to_nat_slow",
    "nat_to_tree_slow",
    "iterate_hfseq",
    "enumerate_hfseq",
    "from_decimal",
    "to_decimal",
    "validate_decimal",
]
