"""Successor and predecessor on System-T types.

succ_t and pred_t are the two one-way relations. sp_step is the merged
bidirectional relation: one recursion serving both directions, where the
clause for an arrow-headed type flips the direction of its nested call and
the clause for an e-headed type orders its two nested calls by direction.
"""

from __future__ import annotations

import logging
from itertools import islice
from typing import Iterator, List, Optional, Union

from errors import DomainError, NatRangeError, UsageError
from natseq.pairing import Nat, check_nat, nat_bits
from natseq.ranking import fits_nat
from .conversion import type_to_hfseq
from .types import E, Direction, TType, arrow

logger = logging.getLogger(__name__)

ONE_T = arrow(E, E)


def succ_t(t: TType) -> TType:
    """Successor: t2n(succ_t(t)) = t2n(t) + 1."""
    # (e->Xs) -> ((K1->Ks)->Ys) with succ_t(Xs) = (K->Ys), succ_t(K) = (K1->Ks);
    # over a run of e heads this counts the run into the new left operand
    run = 0
    while not t.is_leaf and t.left.is_leaf:
        run += 1
        t = t.right
    if t.is_leaf:
        ys = E
    else:
        # ((K->Ks)->Xs) -> (e->(K1->Xs)) with K1 = pred_t(K->Ks)
        ys = arrow(pred_t(t.left), t.right)
    k = E
    for _ in range(run):
        k = succ_t(k)
    return arrow(k, ys)


def pred_t(t: TType) -> TType:
    """Predecessor.

    Raises:
        DomainError: for e.
    """
    if t.is_leaf:
        raise DomainError("pred_t of e (zero has no predecessor)")
    # ((K->Ks)->Xs) -> (e->Zs) with K1 = pred_t(K->Ks), Zs = pred_t(K1->Xs)
    run = 0
    while not t.left.is_leaf:
        t = arrow(pred_t(t.left), t.right)
        run += 1
    if t.right.is_leaf:
        result = E
    else:
        # (e->(K->Xs)) -> ((K1->Ks)->Xs) with succ_t(K) = (K1->Ks)
        result = arrow(succ_t(t.right.left), t.right.right)
    for _ in range(run):
        result = arrow(E, result)
    return result


# ----------------------------------------------------------------------
# Merged bidirectional relation
# ----------------------------------------------------------------------
def _sp(direction: Direction, t: TType) -> TType:
    if direction is Direction.UP:
        if t.is_leaf:
            return ONE_T
        if not t.left.is_leaf:
            return arrow(E, arrow(_flip_sp(direction, t.left), t.right))
        return _order_sp(direction, t)

    if t.is_leaf:
        raise DomainError("no type has e as its successor")
    if t.left.is_leaf and t.right.is_leaf:
        return E
    if t.left.is_leaf:
        return arrow(_flip_sp(direction, t.right.left), t.right.right)
    return _order_sp(direction, t)


def _flip_sp(direction: Direction, t: TType) -> TType:
    """The nested step of the arrow-headed clause runs the other way."""
    return _sp(direction.flipped, t)


def _order_sp(direction: Direction, t: TType) -> TType:
    """The two nested steps of the e-headed clause, ordered by direction.

    Each clause feeds its second step back into the same clause, so the
    chain of those steps is unrolled into a loop.
    """
    if direction is Direction.UP:
        # t = (e->Xs): first (K->Ys) from Xs, then (K1->Ks) from K
        run = 0
        while not t.is_leaf and t.left.is_leaf:
            run += 1
            t = t.right
        k_ys = _sp(direction, t)
        for _ in range(run):
            k_ys = arrow(_sp(direction, k_ys.left), k_ys.right)
        return k_ys
    # t = ((K1->Ks)->Ys): first K from (K1->Ks), then Xs from (K->Ys)
    run = 0
    while not t.left.is_leaf:
        t = arrow(_sp(direction, t.left), t.right)
        run += 1
    xs = _sp(direction, t)
    for _ in range(run):
        xs = arrow(E, xs)
    return xs


def sp_step(direction: Union[Direction, str], t: TType) -> TType:
    """One step of the merged relation: up is succ_t, down is pred_t.

    Raises:
        DomainError: for a down step from e.
    """
    return _sp(Direction(direction), t)


def sp_infer(x: Optional[TType] = None, y: Optional[TType] = None) -> Union[TType, bool]:
    """Solve y = succ_t(x) for whichever side is missing.

    With only x, returns its successor; with only y, its predecessor; with
    both, whether y is the successor of x.

    Raises:
        UsageError: when neither side is given.
        DomainError: when asked for the predecessor of e.
    """
    if x is None and y is None:
        raise UsageError("sp_infer needs at least one of x and y")
    if y is None:
        return _sp(Direction.UP, x)
    if x is None:
        return _sp(Direction.DOWN, y)
    return _sp(Direction.UP, x) == y


# ----------------------------------------------------------------------
# Counting and enumeration
# ----------------------------------------------------------------------
def t2n(t: TType) -> Nat:
    """Number of pred_t steps from t down to e.

    Raises:
        NatRangeError: when the value does not fit in Nat.
    """
    if not fits_nat(type_to_hfseq(t)):
        raise NatRangeError(f"value does not fit in {nat_bits()} bits")
    n = 0
    while not t.is_leaf:
        t = pred_t(t)
        n += 1
    return n


def iterate_t() -> Iterator[TType]:
    """The endless stream e, (e->e), ((e->e)->e), (e->e->e), ..."""
    t = E
    while True:
        yield t
        t = succ_t(t)


def enumerate_t(k: Nat) -> List[TType]:
    """First k elements of the succ_t stream; element i encodes i."""
    check_nat(k, "count")
    return list(islice(iterate_t(), k))
