"""Parity recognizers and the bijective base-2 view of HFSeq.

Every positive number is uniquely 2x + 1 or 2x + 2, so a tree can be read as
a digit string over {1, 2} (least-significant first). mk_odd and mk_even are
the two constructors, r_dtor the shared deconstructor.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable, List

from errors import DomainError, NatRangeError
from natseq.hfseq import EMPTY, HFSeq
from natseq.pairing import Nat, check_nat, nat_bits
from natseq.ranking import fits_nat
from .successor import pred, succ

logger = logging.getLogger(__name__)

BigDigitSeq = List[int]


class Parity(str, Enum):
    """Exactly one holds for any tree."""
    ZERO = "zero"
    ODD = "odd"
    EVEN_POS = "even_pos"


def parity(t: HFSeq) -> Parity:
    if t.is_empty:
        return Parity.ZERO
    if t.first_is_empty:
        return Parity.ODD
    return Parity.EVEN_POS


def mk_odd(t: HFSeq) -> HFSeq:
    """2 * v(t) + 1: prepend an empty child."""
    return HFSeq.prepend_empties(1, t)


def mk_even(t: HFSeq) -> HFSeq:
    """2 * v(t) + 2: the successor of mk_odd(t)."""
    return succ(mk_odd(t))


def r_dtor(t: HFSeq) -> HFSeq:
    """Inverse of both mk_odd and mk_even: floor((v(t) - 1) / 2).

    Raises:
        DomainError: for the empty tree.
    """
    if t.is_empty:
        raise DomainError("r_dtor of the empty tree")
    if not t.ones:
        # even: 2x + 2 - 1 = 2x + 1
        t = pred(t)
    return HFSeq.prepend_empties(t.ones - 1, t.tail)


def bijective_digits(t: HFSeq) -> BigDigitSeq:
    """Digits over {1, 2}, least-significant first; [] for zero."""
    digits: BigDigitSeq = []
    while not t.is_empty:
        if t.ones:
            # a run of k empty children is k digits 1 in a row
            digits.extend([1] * t.ones)
            t = t.tail
        else:
            digits.append(2)
            t = r_dtor(t)
    return digits


def from_bijective_digits(digits: Iterable[int]) -> HFSeq:
    """Inverse of bijective_digits."""
    t = EMPTY
    for d in reversed(list(digits)):
        if d == 1:
            t = mk_odd(t)
        elif d == 2:
            t = mk_even(t)
        else:
            raise DomainError(f"bijective base-2 digit must be 1 or 2, got {d!r}")
    return t


def to_nat(t: HFSeq) -> Nat:
    """Value of t read off its bijective base-2 digits.

    Raises:
        NatRangeError: when the value does not fit in Nat.
    """
    bits = nat_bits()
    if not fits_nat(t):
        raise NatRangeError(f"value does not fit in {bits} bits")
    n = 0
    for d in reversed(bijective_digits(t)):
        n = 2 * n + d
    return n


def from_nat(n: Nat) -> HFSeq:
    """Build the tree for n from its bijective base-2 digits."""
    check_nat(n)
    digits: BigDigitSeq = []
    while n:
        if n & 1:
            digits.append(1)
            n = (n - 1) >> 1
        else:
            digits.append(2)
            n = (n - 2) >> 1
    return from_bijective_digits(digits)
