"""Code-length analytics: parsize, Kraft sums and the fix-free property.

Sums are accumulated in ascending rank order in double precision, so the
results are bit-reproducible.
"""

from __future__ import annotations

import logging
import math
from typing import List

from pydantic import BaseModel, ConfigDict, Field

from errors import DomainError
from natseq.pairing import Nat, check_nat
from natseq.ranking import nat_to_hfseq
from .codec import encode, format_code

logger = logging.getLogger(__name__)


class KraftReport(BaseModel):
    """Kraft sum over the codes of ranks 0..m-1 and whether it stays <= 1."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1, description="Number of ranks summed")
    sum: float = Field(description="Sum of 2**-len(code) over the ranks")
    holds: bool = Field(description="True when the sum is at most 1")


def parsize(n: Nat) -> Nat:
    """Length of the Dyck code of n."""
    return len(encode(nat_to_hfseq(n)))


def kraft_term(n: Nat) -> float:
    return math.ldexp(1.0, -parsize(n))


def kraft_sum(m: Nat) -> float:
    """Sum of kraft_term(n) for n = 0..m-1, in that order.

    Raises:
        DomainError: for m < 1.
    """
    check_nat(m, "m")
    if m < 1:
        raise DomainError("kraft_sum needs m >= 1")
    logger.debug(f"kraft_sum: summing {m} terms")
    total = 0.0
    for n in range(m):
        total += kraft_term(n)
    return total


def kraft_check(m: Nat) -> KraftReport:
    total = kraft_sum(m)
    return KraftReport(m=m, sum=total, holds=total <= 1.0)


def _no_prefix_pairs(words: List[str]) -> bool:
    """After sorting, a word that prefixes another sits right before one it prefixes."""
    ordered = sorted(words)
    return all(not b.startswith(a) for a, b in zip(ordered, ordered[1:]))


def prefix_free_check(m: Nat) -> bool:
    """True when the codes of ranks 0..m-1 are both prefix-free and suffix-free.

    Raises:
        DomainError: for m < 2.
    """
    check_nat(m, "m")
    if m < 2:
        raise DomainError("prefix_free_check needs m >= 2")
    logger.debug(f"prefix_free_check: {m} codes")
    words = [format_code(encode(nat_to_hfseq(n))) for n in range(m)]
    if not _no_prefix_pairs(words):
        logger.warning(f"prefix property violated among the first {m} codes")
        return False
    if not _no_prefix_pairs([w[::-1] for w in words]):
        logger.warning(f"suffix property violated among the first {m} codes")
        return False
    return True
