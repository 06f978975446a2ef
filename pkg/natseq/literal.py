"""Tree literal grammar: tree := "[" ( tree ("," tree)* )? "]".

Whitespace is insignificant on input; the canonical printer emits none,
e.g. ``[[],[]]``. Both directions use explicit stacks so that deeply nested
or very wide literals never hit the recursion limit.
"""

from __future__ import annotations

from typing import List

from errors import ParseError
from .hfseq import EMPTY, HFSeq

# What the parser may see next
_EXPECT_TREE = 0            # right after "," (or at the very start)
_EXPECT_TREE_OR_CLOSE = 1   # right after "["
_EXPECT_COMMA_OR_CLOSE = 2  # right after a completed child


def parse_hfseq(text: str) -> HFSeq:
    """Parse a tree literal into an HFSeq.

    Raises:
        ParseError: on any character or structure outside the grammar,
            with the offending offset.
    """
    stack: List[List[HFSeq]] = []
    result = None
    expect = _EXPECT_TREE

    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if result is not None:
            raise ParseError("unexpected input after the tree literal", pos)
        if ch == "[":
            if expect == _EXPECT_COMMA_OR_CLOSE:
                raise ParseError("expected ',' or ']'", pos)
            stack.append([])
            expect = _EXPECT_TREE_OR_CLOSE
        elif ch == "]":
            if not stack or expect == _EXPECT_TREE:
                raise ParseError("unexpected ']'", pos)
            node = HFSeq.from_children(stack.pop())
            if stack:
                stack[-1].append(node)
                expect = _EXPECT_COMMA_OR_CLOSE
            else:
                result = node
        elif ch == ",":
            if expect != _EXPECT_COMMA_OR_CLOSE:
                raise ParseError("unexpected ','", pos)
            expect = _EXPECT_TREE
        else:
            raise ParseError(f"invalid character {ch!r} in tree literal", pos)

    if result is None:
        if stack:
            raise ParseError("unterminated tree literal: missing ']'", len(text))
        raise ParseError("empty tree literal", 0)
    return result


def format_hfseq(tree: HFSeq) -> str:
    """Render a tree in canonical literal form (no whitespace)."""
    parts: List[str] = ["["]
    # Each frame: [children iterator, whether a child was already written]
    stack = [[tree.children(), False]]
    while stack:
        frame = stack[-1]
        child = next(frame[0], None)
        if child is None:
            parts.append("]")
            stack.pop()
            continue
        if frame[1]:
            parts.append(",")
        frame[1] = True
        if child is EMPTY or child.is_empty:
            parts.append("[]")
        else:
            parts.append("[")
            stack.append([child.children(), False])
    return "".join(parts)
