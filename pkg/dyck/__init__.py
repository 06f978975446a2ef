from dyck.codec import (
    CLOSE,
    OPEN,
    DyckCode,
    decode,
    encode,
    format_code,
    is_dyck_prime,
    parse_code,
)
from dyck.kraft import (
    KraftReport,
    kraft_check,
    kraft_sum,
    kraft_term,
    parsize,
    prefix_free_check,
)

__all__ = [
    "DyckCode",
    "OPEN",
    "CLOSE",
    "encode",
    "decode",
    "parse_code",
    "format_code",
    "is_dyck_prime",
    "parsize",
    "kraft_term",
    "kraft_sum",
    "kraft_check",
    "KraftReport",
    "prefix_free_check",
]
