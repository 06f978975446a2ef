"""System-T types as numerals: the leaf e and the arrow constructor.

Type literals follow

    type := "e" | "(" type ")" | type "->" type      ("->" is right-associative)

and print in one fixed style: a non-leaf type is wrapped in one pair of
parentheses, a left operand is parenthesized iff it is an arrow, and right
nesting is left bare, e.g. ``(e->e->e)`` and ``(((e->e)->e)->e)``.

Parsing, printing, equality and hashing all use explicit stacks, so a type
nested thousands of levels deep is handled like any other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from errors import ParseError

_LEAF_HASH = hash("e")


@dataclass(frozen=True, eq=False, repr=False)
class TType:
    """Binary tree over the base type e; E is the leaf, arrow(l, r) the rest."""
    left: Optional["TType"] = None
    right: Optional["TType"] = None
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.left is None:
            h = _LEAF_HASH
        else:
            h = hash((self.left._hash, self.right._hash))
        object.__setattr__(self, "_hash", h)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TType):
            return NotImplemented
        pending = [(self, other)]
        while pending:
            a, b = pending.pop()
            if a is b:
                continue
            if a._hash != b._hash or a.is_leaf != b.is_leaf:
                return False
            if not a.is_leaf:
                pending.append((a.right, b.right))
                pending.append((a.left, b.left))
        return True

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"TType({print_type(self)!r})"

    def __str__(self) -> str:
        return print_type(self)


E = TType()


def arrow(left: TType, right: TType) -> TType:
    return TType(left, right)


class Direction(str, Enum):
    """Orientation of the merged successor relation."""
    UP = "up"
    DOWN = "down"

    @property
    def flipped(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------
def print_type(t: TType) -> str:
    if t.is_leaf:
        return "e"
    parts: List[str] = ["("]
    # current position on each open right spine
    spines: List[TType] = [t]
    while spines:
        node = spines[-1]
        if node.is_leaf:
            parts.append("e)")
            spines.pop()
            if spines:
                parts.append("->")
            continue
        spines[-1] = node.right
        if node.left.is_leaf:
            parts.append("e->")
        else:
            parts.append("(")
            spines.append(node.left)
    return "".join(parts)


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------
def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens: List[Tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "e()":
            tokens.append((ch, pos))
            pos += 1
        elif text.startswith("->", pos):
            tokens.append(("->", pos))
            pos += 2
        else:
            raise ParseError(f"invalid character {ch!r} in type literal", pos)
    return tokens


def _fold_chain(operands: List[TType]) -> TType:
    result = operands.pop()
    while operands:
        result = arrow(operands.pop(), result)
    return result


def parse_type(text: str) -> TType:
    """Parse a type literal.

    Raises:
        ParseError: with the offset of the offending token.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty type literal", 0)

    # operands of each open parenthesis group, outermost first
    groups: List[List[TType]] = [[]]
    expect_atom = True
    for token, pos in tokens:
        if expect_atom:
            if token == "e":
                groups[-1].append(E)
                expect_atom = False
            elif token == "(":
                groups.append([])
            else:
                raise ParseError(f"expected 'e' or '(', got {token!r}", pos)
        elif token == "->":
            expect_atom = True
        elif token == ")" and len(groups) > 1:
            inner = _fold_chain(groups.pop())
            groups[-1].append(inner)
        elif len(groups) > 1:
            raise ParseError(f"expected '->' or ')', got {token!r}", pos)
        else:
            raise ParseError(f"unexpected {token!r} after the type literal", pos)

    if expect_atom:
        raise ParseError("unexpected end of type literal", len(text))
    if len(groups) > 1:
        raise ParseError("expected ')'", len(text))
    return _fold_chain(groups[0])
