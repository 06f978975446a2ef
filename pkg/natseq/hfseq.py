"""The HFSeq value type: rooted ordered trees encoding natural numbers.

A tree is stored in first-child/next-sibling form with three node kinds:

    EMPTY            the tree with no children (encodes 0)
    cons(h, t)       children h, then the children of t; h is never EMPTY
    run(k, t)        k >= 1 empty children, then the children of t;
                     t is EMPTY or a cons node

Consecutive empty children are always merged into a single run, so the
representation of a given abstract tree is unique and structural equality of
representations is equality of trees. A run of k empty children stands for
the low-order bits 1...1 (k ones) of the encoded number, which is what keeps
towers like [[[[...]]]] symbolic under succ/pred.

Values are immutable; every instance caches its hash and node count at
construction, so nothing here recurses along siblings.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional


_TAG_CONS = 1
_TAG_RUN = 2


class HFSeq:
    """A hereditarily finite sequence (rooted ordered tree).

    Build instances with HFSeq.of(...), HFSeq.from_children(...),
    HFSeq.prepend(...) or HFSeq.prepend_empties(...); the raw initializer
    does not enforce the canonical form.
    """

    __slots__ = ("head", "tail", "ones", "_hash", "_nodes")

    def __init__(self, head: Optional["HFSeq"], tail: Optional["HFSeq"], ones: int) -> None:
        self.head = head
        self.tail = tail
        self.ones = ones
        if tail is None:
            self._hash = hash(())
            self._nodes = 1
        elif ones:
            self._hash = hash((_TAG_RUN, ones, tail._hash))
            self._nodes = ones + tail._nodes
        else:
            self._hash = hash((_TAG_CONS, head._hash, tail._hash))
            self._nodes = head._nodes + tail._nodes

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @staticmethod
    def prepend(head: "HFSeq", tail: "HFSeq") -> "HFSeq":
        """Return the tree whose children are head followed by the children of tail."""
        if head.tail is None:
            return HFSeq.prepend_empties(1, tail)
        return HFSeq(head, tail, 0)

    @staticmethod
    def prepend_empties(count: int, tail: "HFSeq") -> "HFSeq":
        """Return the tree with *count* empty children in front of the children of tail."""
        if count == 0:
            return tail
        if tail.ones:
            return HFSeq(None, tail.tail, count + tail.ones)
        return HFSeq(None, tail, count)

    @classmethod
    def from_children(cls, children: Iterable["HFSeq"]) -> "HFSeq":
        node = EMPTY
        for child in reversed(list(children)):
            node = cls.prepend(child, node)
        return node

    @classmethod
    def of(cls, *children: "HFSeq") -> "HFSeq":
        """HFSeq.of(a, b) is the tree [a, b]."""
        return cls.from_children(children)

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------
    @property
    def is_empty(self) -> bool:
        return self.tail is None

    @property
    def first_is_empty(self) -> bool:
        """True when the first child exists and is empty (the encoded number is odd)."""
        return self.ones > 0

    @property
    def node_count(self) -> int:
        """Number of nodes, root included."""
        return self._nodes

    def children(self) -> Iterator["HFSeq"]:
        """Iterate over the children in order."""
        node = self
        while node.tail is not None:
            if node.ones:
                for _ in range(node.ones):
                    yield EMPTY
            else:
                yield node.head
            node = node.tail

    # ------------------------------------------------------------------
    # Equality and display
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HFSeq):
            return NotImplemented
        pending = [(self, other)]
        while pending:
            a, b = pending.pop()
            if a is b:
                continue
            if a._hash != b._hash or a.ones != b.ones or a._nodes != b._nodes:
                return False
            if a.tail is None or b.tail is None:
                if a.tail is not b.tail:
                    return False
                continue
            pending.append((a.tail, b.tail))
            if a.head is not None:
                pending.append((a.head, b.head))
        return True

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        from .literal import format_hfseq
        return format_hfseq(self)

    def __repr__(self) -> str:
        if self._nodes > _REPR_NODE_LIMIT:
            return f"HFSeq(<{self._nodes} nodes>)"
        return f"HFSeq('{self}')"


_REPR_NODE_LIMIT = 256

EMPTY = HFSeq(None, None, 0)
ONE = HFSeq(None, EMPTY, 1)
