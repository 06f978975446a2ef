"""First-child / next-sibling isomorphism between HFSeq and TType.

A node with children c1..ck maps to arrow(conv(c1), conv(node with c2..ck)),
and the empty tree maps to e. Both directions walk an explicit stack of
pending nodes, so depth is limited only by memory.
"""

from __future__ import annotations

from typing import List, Tuple

from natseq.hfseq import EMPTY, HFSeq
from .types import E, TType, arrow


def hfseq_to_type(t: HFSeq) -> TType:
    # (children of a node, types converted so far)
    frames: List[Tuple[List[HFSeq], List[TType]]] = [(list(t.children()), [])]
    while True:
        children, done = frames[-1]
        if len(done) < len(children):
            child = children[len(done)]
            if child.is_empty:
                done.append(E)
            else:
                frames.append((list(child.children()), []))
            continue
        result = E
        for converted in reversed(done):
            result = arrow(converted, result)
        frames.pop()
        if not frames:
            return result
        frames[-1][1].append(result)


def type_to_hfseq(t: TType) -> HFSeq:
    # [position on a right spine, children converted so far]
    frames: List[list] = [[t, []]]
    while True:
        frame = frames[-1]
        cur, done = frame
        if not cur.is_leaf:
            frame[0] = cur.right
            if cur.left.is_leaf:
                done.append(EMPTY)
            else:
                frames.append([cur.left, []])
            continue
        result = HFSeq.from_children(done)
        frames.pop()
        if not frames:
            return result
        frames[-1][1].append(result)
