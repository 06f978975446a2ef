"""Implementations of the convert, arith, enum and kraft commands.

Each command returns the lines to print; main.py owns stdout and exit codes.
"""

from __future__ import annotations

import logging
from itertools import islice
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import yaml
from pydantic import BaseModel, Field, ValidationError

from dyck.kraft import kraft_check
from errors import UsageError
from hfs_arith import bijective, operations, successor
from hfs_arith.slow import iterate_hfseq
from system_t.successor import iterate_t
from system_t.types import print_type
from .formats import Format, parse_input, render

logger = logging.getLogger(__name__)

DEFAULT_KRAFT_MS = [10, 100, 1000, 2000, 3000, 4000]
KRAFT_TOLERANCE = 1e-6

_BINARY_OPS = {
    "add": operations.add,
    "mul": operations.mul,
    "sub": operations.sub,
}
_UNARY_OPS = {
    "succ": successor.succ,
    "pred": successor.pred,
}
ARITH_OPS = sorted([*_BINARY_OPS, *_UNARY_OPS, "cmp", "pow"])


def cmd_convert(text: str, target: Format, source: Optional[Format] = None) -> str:
    tree, _ = parse_input(text, source)
    return render(tree, target)


def cmd_arith(
    op: str,
    operands: Sequence[str],
    source: Optional[Format] = None,
    target: Optional[Format] = None,
) -> str:
    """Apply *op* to the parsed operands; the result is rendered in the first operand's form.

    Raises:
        UsageError: for an unknown operation or the wrong number of operands.
    """
    if op not in ARITH_OPS:
        raise UsageError(f"unknown operation '{op}' (expected one of {', '.join(ARITH_OPS)})")
    arity = 1 if op in _UNARY_OPS else 2
    if len(operands) != arity:
        raise UsageError(f"'{op}' takes {arity} operand(s), got {len(operands)}")

    parsed = [parse_input(text, source) for text in operands]
    x, first_format = parsed[0]
    out_format = target or first_format

    if op in _UNARY_OPS:
        return render(_UNARY_OPS[op](x), out_format)
    y = parsed[1][0]
    if op == "cmp":
        return operations.cmp(x, y).value
    if op == "pow":
        return render(operations.pow(x, bijective.to_nat(y)), out_format)
    return render(_BINARY_OPS[op](x, y), out_format)


def cmd_enum(k: int, fmt: Format = Format.TREE) -> List[str]:
    """The first k ranks with their renderings, one "rank<TAB>text" line each.

    Types come from the succ_t stream, every other form from the succ stream.
    """
    if k < 0:
        raise UsageError(f"count must be non-negative, got {k}")
    fmt = Format(fmt)
    if fmt is Format.TYPE:
        rendered = (print_type(t) for t in islice(iterate_t(), k))
    else:
        rendered = (render(t, fmt) for t in islice(iterate_hfseq(), k))
    return [f"{i}\t{text}" for i, text in enumerate(rendered)]


class KraftReferenceRow(BaseModel):
    m: int = Field(ge=1)
    expected: float


def load_kraft_reference(path: Optional[Path]) -> Dict[int, float]:
    """Read reference Kraft sums from YAML (``rows: [{m: .., expected: ..}]``).

    A missing or malformed file yields an empty table.
    """
    if path is None:
        return {}
    try:
        cfg = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"[kraft] Failed to load reference YAML '{path}': {e}")
        return {}

    rows = cfg.get("rows") if isinstance(cfg, dict) else None
    if not isinstance(rows, list):
        logger.error(f"[kraft] 'rows' key in '{path}' must be a list - ignoring the reference")
        return {}

    table: Dict[int, float] = {}
    for raw in rows:
        try:
            row = KraftReferenceRow.model_validate(raw)
        except ValidationError as e:
            logger.warning(f"[kraft] Skipping invalid reference row {raw!r}: {e}")
            continue
        table[row.m] = row.expected
    logger.debug(f"[kraft] Loaded {len(table)} reference rows from {path}")
    return table


def cmd_kraft(ms: Optional[Sequence[int]] = None, reference: Optional[Dict[int, float]] = None) -> List[str]:
    """One row per m: m, the sum to 6 decimals, and whether it is <= 1.

    Rows whose m appears in *reference* also carry the expected value and
    "ok" or "MISMATCH". With no ms, the reference rows (or the default
    table) are computed.
    """
    reference = reference or {}
    if not ms:
        ms = sorted(reference) or DEFAULT_KRAFT_MS
    for m in ms:
        if m < 1:
            raise UsageError(f"kraft needs m >= 1, got {m}")

    lines: List[str] = []
    for m in ms:
        report = kraft_check(m)
        line = f"{report.m}\t{report.sum:.6f}\t{str(report.holds).lower()}"
        if m in reference:
            expected = reference[m]
            verdict = "ok" if abs(report.sum - expected) <= KRAFT_TOLERANCE else "MISMATCH"
            line += f"\t{expected:.6f}\t{verdict}"
        lines.append(line)
    return lines
