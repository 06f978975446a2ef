"""Successor and predecessor on HFSeq.

The three-way case split follows the tree shape: the empty tree, a tree
whose first child is empty (odd value) and a tree whose first child is
non-empty (positive even value). Because consecutive empty children are
stored as a single run, carry propagation over a block of ones is one step
instead of one step per sibling, and recursion only ever descends into the
first child (whose depth is iterated-logarithmic in the value).
"""

from __future__ import annotations

from errors import DomainError
from natseq.hfseq import EMPTY, ONE, HFSeq
from natseq.ranking import int_to_hfseq, run_count


def succ(t: HFSeq) -> HFSeq:
    """Return the tree encoding v(t) + 1.

    >>> str(succ(HFSeq.of(HFSeq.of())))
    '[[[]]]'
    """
    if t.is_empty:
        return ONE
    if t.ones:
        # 2^k * (v(rest) + 1) - 1, plus one, is 2^k * (v(rest) + 1)
        rest = t.tail
        if rest.is_empty:
            return HFSeq.prepend(int_to_hfseq(t.ones), EMPTY)
        # rest starts with a non-empty child, so v(rest) + 1 is odd: 2y + 1
        half = HFSeq.prepend(pred(rest.head), rest.tail)
        return HFSeq.prepend(int_to_hfseq(t.ones), half)
    # 2^a * (2y + 1) + 1 = 2 * (2^(a-1) * (2y + 1)) + 1
    return HFSeq.prepend_empties(1, HFSeq.prepend(pred(t.head), t.tail))


def pred(t: HFSeq) -> HFSeq:
    """Return the tree encoding v(t) - 1.

    Raises:
        DomainError: when t is the empty tree (zero has no predecessor).
    """
    if t.is_empty:
        raise DomainError("pred of the empty tree (zero has no predecessor)")
    if t.ones:
        return _pred_odd(t)
    # 2^a * (2y + 1) - 1 is a run of a ones in front of 2y
    exponent = run_count(t.head)
    return HFSeq.prepend_empties(exponent, _pred_odd(HFSeq.prepend_empties(1, t.tail)))


def _pred_odd(t: HFSeq) -> HFSeq:
    """pred for a tree whose first child is empty."""
    k = t.ones
    rest = t.tail
    if k >= 2:
        # 2^k * (r + 1) - 2 = 2^1 * (2 * (2^(k-2) * (r + 1) - 1) + 1)
        return HFSeq.prepend(ONE, HFSeq.prepend_empties(k - 2, rest))
    if rest.is_empty:
        return EMPTY
    # 2 * v(rest): bump the exponent of the first child of rest
    return HFSeq.prepend(succ(rest.head), rest.tail)
