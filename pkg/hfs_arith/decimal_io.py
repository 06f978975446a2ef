"""Decimal strings in and out of HFSeq, for numbers beyond Nat.

from_decimal folds the digits through add and mul; to_decimal streams the
bijective base-2 digits into base-10**9 limbs. Both are quadratic in the
number of digits.
"""

from __future__ import annotations

import logging
from typing import List

from errors import ParseError
from natseq.hfseq import EMPTY, HFSeq
from natseq.ranking import int_to_hfseq
from .bijective import bijective_digits
from .operations import add, mul

logger = logging.getLogger(__name__)

_LIMB_DIGITS = 9
_LIMB_BASE = 10 ** _LIMB_DIGITS

_DIGIT_TREES = [int_to_hfseq(d) for d in range(10)]
_TEN = int_to_hfseq(10)


def validate_decimal(text: str) -> str:
    """Check the DecimalString grammar 0 | [1-9][0-9]* and return the text.

    Raises:
        ParseError: with the position of the first offending character.
    """
    if not text:
        raise ParseError("empty decimal string", 0)
    for pos, ch in enumerate(text):
        if ch not in "0123456789":
            raise ParseError(f"invalid character {ch!r} in decimal string", pos)
    if len(text) > 1 and text[0] == "0":
        raise ParseError("leading zero in decimal string", 0)
    return text


def from_decimal(text: str) -> HFSeq:
    """Parse a decimal string, most-significant digit first."""
    validate_decimal(text)
    logger.debug(f"from_decimal: {len(text)} digits")
    acc = EMPTY
    for ch in text:
        acc = add(mul(acc, _TEN), _DIGIT_TREES[ord(ch) - 48])
    return acc


def to_decimal(t: HFSeq) -> str:
    """Render the value of t in decimal."""
    # little-endian limbs; acc <- 2 * acc + d for each digit, most significant first
    limbs: List[int] = [0]
    for d in reversed(bijective_digits(t)):
        carry = d
        for i, limb in enumerate(limbs):
            # the carry out of a limb can be 2 (999999999 doubled, plus digit 2)
            carry, limbs[i] = divmod(2 * limb + carry, _LIMB_BASE)
        if carry:
            limbs.append(carry)

    head = str(limbs[-1])
    return head + "".join(str(limb).zfill(_LIMB_DIGITS) for limb in reversed(limbs[:-1]))
