from cli_tools.bench import BenchRecord, TowerRecord, cmd_bench, run_bench, run_tower, tower
from cli_tools.commands import (
    ARITH_OPS,
    cmd_arith,
    cmd_convert,
    cmd_enum,
    cmd_kraft,
    load_kraft_reference,
)
from cli_tools.formats import Format, detect_format, parse_input, render

__all__ = [
    "Format",
    "detect_format",
    "parse_input",
    "render",
    "ARITH_OPS",
    "cmd_convert",
    "cmd_arith",
    "cmd_enum",
    "cmd_kraft",
    "load_kraft_reference",
    "cmd_bench",
    "run_bench",
    "run_tower",
    "tower",
    "BenchRecord",
    "TowerRecord",
]
