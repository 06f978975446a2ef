"""Scaling benchmark for add and mul on random bijective base-2 operands.

For digit lengths 256, 512, ... up to max_bits, two operands are drawn as
uniformly random digit strings over {1, 2} from a seeded generator, and the
median wall time of add (and of mul, up to mul_max_bits digits) is recorded
together with the node counts involved. Records print as tab-separated rows.
"""

from __future__ import annotations

import logging
import random
import statistics
import time
from typing import Callable, List, Optional

from pydantic import BaseModel, Field

from errors import UsageError
from hfs_arith.bijective import from_bijective_digits
from hfs_arith.operations import add, mul
from hfs_arith.successor import pred, succ
from natseq.hfseq import EMPTY, HFSeq

logger = logging.getLogger(__name__)

MIN_BENCH_BITS = 256
TOWER_DEPTH = 8

BENCH_HEADER = "#digits\tx_nodes\ty_nodes\tsum_nodes\tadd_median_s\tmul_median_s"


class BenchRecord(BaseModel):
    """Timings for one operand size."""
    digits: int = Field(description="Bijective base-2 digit length of both operands")
    x_nodes: int
    y_nodes: int
    sum_nodes: int
    add_median_s: float
    mul_median_s: Optional[float] = Field(default=None, description="None when mul was skipped at this size")

    def to_tsv(self) -> str:
        mul_text = "-" if self.mul_median_s is None else f"{self.mul_median_s:.6f}"
        return (
            f"{self.digits}\t{self.x_nodes}\t{self.y_nodes}\t{self.sum_nodes}"
            f"\t{self.add_median_s:.6f}\t{mul_text}"
        )


class TowerRecord(BaseModel):
    depth: int
    seconds: float
    round_trip: bool

    def to_tsv(self) -> str:
        return f"#tower\t{self.depth}\t{self.seconds:.6f}\t{'ok' if self.round_trip else 'FAILED'}"


def random_operand(rng: random.Random, digits: int) -> HFSeq:
    """A uniformly random number with exactly *digits* bijective base-2 digits."""
    return from_bijective_digits([rng.choice((1, 2)) for _ in range(digits)])


def bench_sizes(max_bits: int) -> List[int]:
    sizes = []
    d = MIN_BENCH_BITS
    while d <= max_bits:
        sizes.append(d)
        d *= 2
    return sizes


def _median_time(fn: Callable[[], HFSeq], trials: int) -> float:
    samples = []
    for _ in range(trials):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def tower(depth: int) -> HFSeq:
    """The nested singleton [[...[]...]] with *depth* levels of nesting."""
    t = EMPTY
    for _ in range(depth):
        t = HFSeq.of(t)
    return t


def run_tower(depth: int = TOWER_DEPTH) -> TowerRecord:
    """Time pred(succ(T)) for a tower T; no flat digit string is ever built."""
    t = tower(depth)
    start = time.perf_counter()
    bumped = succ(t)
    back = pred(bumped)
    seconds = time.perf_counter() - start
    ok = back == t and bumped != t
    if not ok:
        logger.error(f"tower round trip failed at depth {depth}")
    return TowerRecord(depth=depth, seconds=seconds, round_trip=ok)


def run_bench(max_bits: int, trials: int, seed: int, mul_max_bits: int) -> List[BenchRecord]:
    """Time add and mul at every size from 256 digits up to *max_bits*.

    Raises:
        UsageError: when max_bits < 256 or trials < 1.
    """
    if max_bits < MIN_BENCH_BITS:
        raise UsageError(f"bench needs max_bits >= {MIN_BENCH_BITS}, got {max_bits}")
    if trials < 1:
        raise UsageError(f"bench needs at least one trial, got {trials}")

    rng = random.Random(seed)
    records: List[BenchRecord] = []
    for digits in bench_sizes(max_bits):
        x = random_operand(rng, digits)
        y = random_operand(rng, digits)
        total = add(x, y)
        add_time = _median_time(lambda: add(x, y), trials)
        mul_time = None
        if digits <= mul_max_bits:
            mul_time = _median_time(lambda: mul(x, y), trials)
        record = BenchRecord(
            digits=digits,
            x_nodes=x.node_count,
            y_nodes=y.node_count,
            sum_nodes=total.node_count,
            add_median_s=add_time,
            mul_median_s=mul_time,
        )
        logger.debug(f"bench: {record.to_tsv()}")
        records.append(record)
    return records


def cmd_bench(
    max_bits: int,
    trials: int,
    seed: int,
    mul_max_bits: int,
    with_tower: bool = False,
) -> List[str]:
    records = run_bench(max_bits, trials, seed, mul_max_bits)
    lines = [BENCH_HEADER] + [r.to_tsv() for r in records]
    if with_tower:
        lines.append(run_tower().to_tsv())
    return lines
