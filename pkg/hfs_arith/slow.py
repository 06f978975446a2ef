"""Reference paths built only from succ and pred.

These are O(n) in the value, not in the size of the representation; they
exist as independent oracles for the fast paths.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterator, List

from errors import NatRangeError
from natseq.hfseq import EMPTY, HFSeq
from natseq.pairing import Nat, check_nat, nat_bits
from natseq.ranking import fits_nat
from .successor import pred, succ


def slow_add(x: HFSeq, y: HFSeq) -> HFSeq:
    """v(x) + v(y) by moving one unit at a time from x to y."""
    while not x.is_empty:
        x = pred(x)
        y = succ(y)
    return y


def tree_to_nat_slow(t: HFSeq) -> Nat:
    """Count the pred steps down to the empty tree."""
    if not fits_nat(t):
        raise NatRangeError(f"value does not fit in {nat_bits()} bits")
    n = 0
    while not t.is_empty:
        t = pred(t)
        n += 1
    return n


def nat_to_tree_slow(n: Nat) -> HFSeq:
    """Apply succ n times to the empty tree."""
    check_nat(n)
    t = EMPTY
    for _ in range(n):
        t = succ(t)
    return t


def iterate_hfseq() -> Iterator[HFSeq]:
    """The endless stream [], [[]], [[[]]], [[],[]], ..."""
    t = EMPTY
    while True:
        yield t
        t = succ(t)


def enumerate_hfseq(k: Nat) -> List[HFSeq]:
    """First k elements of the succ stream; element i encodes i."""
    check_nat(k, "count")
    return list(islice(iterate_hfseq(), k))
