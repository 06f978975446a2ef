"""Ranking and unranking: the N <-> HFSeq bijection.

nat_to_hfseq unfolds n into nat_to_list(n) and recurses on every element;
hfseq_to_nat folds the children back with the 2^x(2y+1) law. The generic rank/unrank
combinators expose the same structured recursion for any pair of
list <-> number transformations.
"""

from __future__ import annotations

import logging
from typing import Callable, List, Optional, Sequence

from config import get_config
from errors import NatRangeError
from .hfseq import EMPTY, HFSeq
from .pairing import Nat, exponent_gaps, nat_bits, nat_to_list

logger = logging.getLogger(__name__)


def unrank(f: Callable[[int], Sequence[int]], n: int) -> HFSeq:
    """Build a tree by applying *f* to n and then to every resulting element."""
    return HFSeq.from_children(unrank(f, x) for x in f(n))


def rank(g: Callable[[List[int]], int], tree: HFSeq) -> int:
    """Fold a tree bottom-up by applying *g* to the ranks of the children."""
    return g([rank(g, child) for child in tree.children()])


def nat_to_hfseq(n: Nat) -> HFSeq:
    """Return the tree encoding n.

    >>> str(nat_to_hfseq(2012))
    '[[[[]]],[],[],[[]],[],[],[],[]]'
    """
    return HFSeq.from_children(nat_to_hfseq(x) for x in nat_to_list(n))


def hfseq_to_nat(tree: HFSeq) -> Nat:
    """Return the number encoded by *tree*.

    Raises:
        NatRangeError: when the value does not fit in Nat.
    """
    return tree_value(tree, nat_bits())


def fits_nat(tree: HFSeq) -> bool:
    """True when the value of *tree* is a representable Nat."""
    try:
        tree_value(tree, nat_bits())
    except NatRangeError:
        return False
    return True


def int_to_hfseq(n: int) -> HFSeq:
    """Unbounded nat_to_hfseq for internal use (run counts of any size)."""
    if n == 0:
        return EMPTY
    return HFSeq.from_children(int_to_hfseq(x) for x in exponent_gaps(n))


def tree_value(tree: HFSeq, bits: Optional[int] = None) -> int:
    """Value law of a tree; with *bits* set, fail as soon as it would exceed 2**bits.

    Empty tree is 0; a child c in front of a tree worth y gives 2**v(c) * (2y + 1);
    a run of k empty children in front of a tree worth y gives 2**k * (y + 1) - 1.
    """
    chain = []
    node = tree
    while node.tail is not None:
        chain.append(node)
        node = node.tail

    acc = 0
    for node in reversed(chain):
        if node.ones:
            k = node.ones
            if bits is not None and k > bits:
                raise NatRangeError(f"value does not fit in {bits} bits")
            acc = ((acc + 1) << k) - 1
        else:
            exponent = tree_value(node.head, bits)
            if bits is not None and exponent >= bits:
                raise NatRangeError(f"value does not fit in {bits} bits")
            acc = (2 * acc + 1) << exponent
        if bits is not None and acc.bit_length() > bits:
            raise NatRangeError(f"value does not fit in {bits} bits")
    return acc


def run_count(tree: HFSeq) -> int:
    """Value of *tree* used as the length of a run of empty children.

    Bounded by the configured max_run_bits so that towers too tall to keep
    symbolic fail loudly instead of exhausting memory.
    """
    return tree_value(tree, get_config().arithmetic.max_run_bits)


__all__ = [
    "unrank",
    "rank",
    "nat_to_hfseq",
    "hfseq_to_nat",
    "fits_nat",
    "int_to_hfseq",
    "tree_value",
    "run_count",
]
