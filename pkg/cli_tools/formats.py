"""Input/output forms accepted by the command line, all routed through HFSeq."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Optional, Tuple

from dyck.codec import decode, encode, format_code, parse_code
from hfs_arith.decimal_io import from_decimal, to_decimal
from natseq.hfseq import HFSeq
from natseq.literal import format_hfseq, parse_hfseq
from system_t.conversion import hfseq_to_type, type_to_hfseq
from system_t.types import parse_type, print_type

logger = logging.getLogger(__name__)

_DYCK_SYMBOLS = frozenset("01()")


class Format(str, Enum):
    DEC = "dec"
    TREE = "tree"
    TYPE = "type"
    DYCK = "dyck"


def detect_format(text: str) -> Format:
    """Guess the form of *text*: dyck, then type, then tree, else decimal.

    A Dyck code must use only 0 1 ( ), start with an open symbol and be at
    least two symbols long, so a lone "0" stays a decimal.
    """
    s = text.strip()
    if len(s) >= 2 and s[0] in "0(" and set(s) <= _DYCK_SYMBOLS:
        return Format.DYCK
    if "e" in s or "->" in s:
        return Format.TYPE
    if s.startswith("["):
        return Format.TREE
    return Format.DEC


def parse_input(text: str, fmt: Optional[Format] = None) -> Tuple[HFSeq, Format]:
    """Parse *text* in the given (or detected) form; returns the tree and the form used."""
    s = text.strip()
    fmt = Format(fmt) if fmt is not None else detect_format(s)
    if fmt is Format.DEC:
        tree = from_decimal(s)
    elif fmt is Format.TREE:
        tree = parse_hfseq(s)
    elif fmt is Format.TYPE:
        tree = type_to_hfseq(parse_type(s))
    else:
        tree = decode(parse_code(s))
    return tree, fmt


def render(tree: HFSeq, fmt: Format) -> str:
    fmt = Format(fmt)
    if fmt is Format.DEC:
        return to_decimal(tree)
    if fmt is Format.TREE:
        return format_hfseq(tree)
    if fmt is Format.TYPE:
        return print_type(hfseq_to_type(tree))
    return format_code(encode(tree))
