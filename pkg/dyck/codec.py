"""Balanced-parenthesis codes for HFSeq.

A tree is written as 0 (open), the codes of its children in order, then
1 (close). Every code is a Dyck prime: it is balanced and no proper
non-empty prefix is. The text forms are the canonical ``01`` string and the
``()`` alias.
"""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from errors import ParseError
from natseq.hfseq import HFSeq

logger = logging.getLogger(__name__)

DyckCode = Tuple[int, ...]

OPEN = 0
CLOSE = 1

_TEXT_SYMBOLS = {"0": OPEN, "1": CLOSE, "(": OPEN, ")": CLOSE}


def encode(t: HFSeq) -> DyckCode:
    """Code of *t*; its length is twice the node count."""
    bits: List[int] = [OPEN]
    stack = [t.children()]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            bits.append(CLOSE)
            stack.pop()
        elif child.is_empty:
            bits.append(OPEN)
            bits.append(CLOSE)
        else:
            bits.append(OPEN)
            stack.append(child.children())
    return tuple(bits)


def decode(code: Sequence[int]) -> HFSeq:
    """Inverse of encode; the input must be exactly one Dyck prime.

    Raises:
        ParseError: on empty input, symbols other than 0 and 1, an unbalanced
            code or bits left over after the closing symbol.
    """
    if len(code) == 0:
        raise ParseError("empty Dyck code", 0)

    # children collected so far, one list per open node
    stack: List[List[HFSeq]] = []
    result = None
    for pos, bit in enumerate(code):
        if isinstance(bit, bool) or bit not in (OPEN, CLOSE):
            raise ParseError(f"invalid symbol {bit!r} in Dyck code", pos)
        if result is not None:
            raise ParseError("trailing bits after a complete code", pos)
        if bit == OPEN:
            stack.append([])
            continue
        if not stack:
            raise ParseError("close without a matching open", pos)
        node = HFSeq.from_children(stack.pop())
        if stack:
            stack[-1].append(node)
        else:
            result = node

    if result is None:
        raise ParseError("unbalanced Dyck code: missing close", len(code))
    return result


def is_dyck_prime(code: Sequence[int]) -> bool:
    """Check the Dyck-prime shape without decoding.

    First bit 0, last bit 1, balanced, and every proper non-empty prefix has
    strictly more 0s than 1s.
    """
    if len(code) < 2 or code[0] != OPEN or code[-1] != CLOSE:
        return False
    depth = 0
    last = len(code) - 1
    for i, bit in enumerate(code):
        if bit == OPEN:
            depth += 1
        elif bit == CLOSE:
            depth -= 1
        else:
            return False
        if i < last and depth <= 0:
            return False
    return depth == 0


def parse_code(text: str) -> DyckCode:
    """Read a code written with 0/1 or with parentheses (whitespace ignored).

    Only the symbols are checked here; use decode for the structure.
    """
    bits: List[int] = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch not in _TEXT_SYMBOLS:
            raise ParseError(f"invalid character {ch!r} in Dyck code", pos)
        bits.append(_TEXT_SYMBOLS[ch])
    return tuple(bits)


def format_code(code: Sequence[int], parens: bool = False) -> str:
    if parens:
        return "".join("(" if bit == OPEN else ")" for bit in code)
    return "".join("0" if bit == OPEN else "1" for bit in code)
