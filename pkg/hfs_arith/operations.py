"""Efficient arithmetic on HFSeq: add, mul, cmp, sub and pow.

add and mul work digit by digit in bijective base-2 through the parity
cases, as if the operands were bitstrings; sub and cmp use the same digit
view. Sibling recursion is replaced by an explicit list of per-digit steps
that is unwound in reverse, so operands with very many digits never grow
the call stack.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import List, Tuple

from errors import DomainError, UnderflowError
from natseq.hfseq import EMPTY, ONE, HFSeq
from natseq.pairing import Nat, check_nat
from .bijective import bijective_digits, mk_even, mk_odd, r_dtor
from .successor import pred, succ

logger = logging.getLogger(__name__)


class Ordering(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


def add(x: HFSeq, y: HFSeq) -> HFSeq:
    """Return the tree encoding v(x) + v(y).

    Per digit pair (x = 2a + dx, y = 2b + dy):
        odd + odd    -> mk_even(a + b)
        odd + even   -> mk_odd(succ(a + b))   (and symmetrically)
        even + even  -> mk_even(succ(a + b))
    """
    # (carry, even) per digit, most recent last
    steps: List[Tuple[bool, bool]] = []
    while not x.is_empty and not y.is_empty:
        x_odd = x.ones > 0
        y_odd = y.ones > 0
        steps.append((not (x_odd and y_odd), x_odd == y_odd))
        x = r_dtor(x)
        y = r_dtor(y)

    r = y if x.is_empty else x
    for carry, even in reversed(steps):
        if carry:
            r = succ(r)
        r = mk_even(r) if even else mk_odd(r)
    return r


def mul0(x: HFSeq, y: HFSeq) -> HFSeq:
    """Return the tree encoding (v(x) + 1) * (v(y) + 1) - 1.

    An odd digit of x shifts the partial result (prepends an empty child); an
    even digit shifts and adds y + 1 on top.
    """
    # run length of odd digits, or 0 for one even digit
    steps: List[int] = []
    while not x.is_empty:
        if x.ones:
            steps.append(x.ones)
            x = x.tail
        else:
            steps.append(0)
            x = r_dtor(x)

    r = y
    for k in reversed(steps):
        if k:
            r = HFSeq.prepend_empties(k, r)
        else:
            r = succ(add(y, mk_odd(r)))
    return r


def mul(x: HFSeq, y: HFSeq) -> HFSeq:
    """Return the tree encoding v(x) * v(y)."""
    if x.is_empty or y.is_empty:
        return EMPTY
    return succ(mul0(pred(x), pred(y)))


def cmp(x: HFSeq, y: HFSeq) -> Ordering:
    """Order two trees by value.

    Shorter bijective digit strings are smaller; equal lengths are compared
    from the most significant digit down, which is sound since digits are 1 or 2.
    """
    if x is y or x == y:
        return Ordering.EQ
    dx = bijective_digits(x)
    dy = bijective_digits(y)
    if len(dx) != len(dy):
        return Ordering.LT if len(dx) < len(dy) else Ordering.GT
    for a, b in zip(reversed(dx), reversed(dy)):
        if a != b:
            return Ordering.LT if a < b else Ordering.GT
    return Ordering.EQ


def sub(x: HFSeq, y: HFSeq) -> HFSeq:
    """Return the tree encoding v(x) - v(y).

    Raises:
        UnderflowError: when v(x) < v(y).
    """
    order = cmp(x, y)
    if order is Ordering.LT:
        raise UnderflowError("sub would underflow: first operand is smaller than the second")
    if order is Ordering.EQ:
        return EMPTY

    # (x_odd, y_odd) per digit; x >= y holds for every pair of halves too
    steps: List[Tuple[bool, bool]] = []
    while not y.is_empty:
        steps.append((x.ones > 0, y.ones > 0))
        x = r_dtor(x)
        y = r_dtor(y)

    r = x
    for x_odd, y_odd in reversed(steps):
        if x_odd == y_odd:
            # 2(a - b)
            r = EMPTY if r.is_empty else mk_even(pred(r))
        elif x_odd:
            # 2a + 1 - (2b + 2) = 2(a - b - 1) + 1
            r = mk_odd(pred(r))
        else:
            # 2a + 2 - (2b + 1) = 2(a - b) + 1
            r = mk_odd(r)
    return r


def pow(x: HFSeq, k: Nat) -> HFSeq:
    """Return the tree encoding v(x) ** k by square-and-multiply.

    Raises:
        DomainError: for 0 ** 0.
    """
    check_nat(k, "exponent")
    if k == 0 and x.is_empty:
        raise DomainError("0 ** 0 is undefined")
    logger.debug(f"pow: exponent {k}, base with {x.node_count} nodes")
    result = ONE
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result
