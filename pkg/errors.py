"""Exception hierarchy shared by every hfseq package.

Library code raises the most specific subclass; only the CLI (main.py)
translates these into process exit codes.
"""

from __future__ import annotations

from typing import Optional


class HFSeqError(Exception):
    """Base class for all errors raised by the hfseq packages."""
    pass


class ParseError(HFSeqError, ValueError):
    """Raised when a literal (decimal, tree, type or Dyck code) is malformed.

    ``position`` is the 0-based offset of the offending character or bit,
    or None when the error concerns the input as a whole.
    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(HFSeqError, ValueError):
    """Raised when an operation is applied outside its domain (e.g. pred of zero)."""
    pass


class UnderflowError(DomainError):
    """Raised by subtraction when the subtrahend exceeds the minuend."""
    pass


class NatRangeError(HFSeqError, OverflowError):
    """Raised when a value does not fit the configured bounded natural range."""
    pass


class UsageError(HFSeqError):
    """Raised on invalid command-line or API usage."""
    pass
