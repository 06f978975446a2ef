"""Bounded-natural building blocks: the 2^x(2y+1) pairing and the N <-> [N] bijection.

Nat is an ordinary Python int restricted to [0, 2**nat_bits); nat_bits comes
from config (64 by default). Every operation that would leave that range
raises NatRangeError instead of silently growing.
"""

from __future__ import annotations

import logging
from typing import Iterable, List, Optional

from config import get_config
from errors import DomainError, NatRangeError

logger = logging.getLogger(__name__)

Nat = int
NatSeq = List[Nat]


def nat_bits() -> int:
    """Width of the bounded natural type."""
    return get_config().arithmetic.nat_bits


def check_nat(value: int, what: str = "value", bits: Optional[int] = None) -> Nat:
    """Validate that *value* is a representable Nat and return it.

    Raises:
        DomainError: for negative or non-integer input.
        NatRangeError: when value >= 2**bits.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{what} must be a natural number, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{what} must be non-negative, got {value}")
    bits = nat_bits() if bits is None else bits
    if value.bit_length() > bits:
        raise NatRangeError(f"{what} does not fit in {bits} bits")
    return value


def cons_nat(x: Nat, y: Nat) -> Nat:
    """Return 2**x * (2*y + 1), the number whose head is x and tail is y."""
    bits = nat_bits()
    check_nat(x, "head", bits)
    check_nat(y, "tail", bits)
    # bit length of the result is x + bit_length(2y+1); check before shifting
    if x + (2 * y + 1).bit_length() > bits:
        raise NatRangeError(f"cons({x}, {y}) does not fit in {bits} bits")
    return (2 * y + 1) << x


def hd_nat(z: Nat) -> Nat:
    """Exponent of 2 in z (count of trailing binary zeros)."""
    check_nat(z, "argument")
    if z == 0:
        raise DomainError("hd of 0 is undefined")
    return (z & -z).bit_length() - 1


def tl_nat(z: Nat) -> Nat:
    """The odd part of z, halved: z >> (hd(z) + 1)."""
    return z >> (hd_nat(z) + 1)


def is_null(z: Nat) -> bool:
    return check_nat(z, "argument") == 0


def exponent_gaps(n: int) -> NatSeq:
    """Unchecked nat_to_list for internal use on arbitrarily large ints."""
    items: NatSeq = []
    while n:
        x = (n & -n).bit_length() - 1
        items.append(x)
        n >>= x + 1
    return items


def nat_to_list(n: Nat) -> NatSeq:
    """Decompose n into the sequence of heads produced by iterating hd/tl.

    >>> nat_to_list(2012)
    [2, 0, 0, 1, 0, 0, 0, 0]
    """
    return exponent_gaps(check_nat(n))


def list_to_nat(items: Iterable[Nat]) -> Nat:
    """Inverse of nat_to_list: fold cons_nat from the right."""
    n = 0
    for x in reversed(list(items)):
        n = cons_nat(x, n)
    return n
