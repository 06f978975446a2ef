"""Centralized configuration and logging setup for hfseq.

This module is the single source of truth for reading and validating environment
variables. No other module should access os.environ directly.

Highlights:
- Reads all env vars and constructs a typed Config instance (Pydantic v2).
- Validates arithmetic bounds (Nat width, run-count width) and benchmark settings.
- Configures global logging (format and level) exactly once on first access.
- Exposes get_config() to retrieve a singleton Config across the app.

Environment variables (see .env.example for full list):
- Logging: DEBUG (true/false)
- Arithmetic: HFSEQ_NAT_BITS, HFSEQ_MAX_RUN_BITS
- Benchmark: HFSEQ_SEED, HFSEQ_BENCH_TRIALS, HFSEQ_MUL_MAX_BITS
- Kraft reference table: HFSEQ_KRAFT_REFERENCE
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Optional
from pydantic import BaseModel, Field, ValidationError, model_validator
from dotenv import load_dotenv

# Load .env file if present (local development). Existing env vars are NOT
# overwritten.
load_dotenv()

DEFAULT_NAT_BITS = 64
DEFAULT_MAX_RUN_BITS = 1 << 20
DEFAULT_SEED = 2012
DEFAULT_TRIALS = 3
DEFAULT_MUL_MAX_BITS = 512

LOCAL_KRAFT_REFERENCE = Path(__file__).resolve().parent / "config" / "kraft_reference.yaml"


class LoggingSettings(BaseModel):
    """Logging configuration simplified to a single DEBUG flag.

    Behavior:
    - If DEBUG env var is truthy (1/true/on), logging is DEBUG.
    - Otherwise logging is INFO.
    """
    debug: bool = Field(default=False, description="True to enable DEBUG level, False for INFO")

    @property
    def level_no(self) -> int:
        return logging.DEBUG if self.debug else logging.INFO


class ArithmeticSettings(BaseModel):
    """Bounds for the machine-natural side of the bijections.

    nat_bits is the width of Nat: every value crossing into ordinary integers
    (to_nat, hfseq_to_nat, list_to_nat, ...) must be < 2**nat_bits.
    max_run_bits bounds the internal count of a run of empty children; it is
    what lets towers of exponents stay symbolic while still failing loudly
    on towers that cannot be handled.
    """
    nat_bits: int = Field(default=DEFAULT_NAT_BITS, ge=64, description="Width of the bounded natural type")
    max_run_bits: int = Field(default=DEFAULT_MAX_RUN_BITS, gt=0, description="Max bit length of a run count")


class BenchSettings(BaseModel):
    """Defaults for the scaling benchmark (overridable by CLI flags)."""
    seed: int = Field(default=DEFAULT_SEED, description="Seed for random operand generation")
    trials: int = Field(default=DEFAULT_TRIALS, gt=0, description="Timed repetitions per size")
    mul_max_bits: int = Field(default=DEFAULT_MUL_MAX_BITS, ge=256, description="Largest digit length timed for mul")


class Config(BaseModel):
    """Top-level configuration container used by the whole application."""
    logging: LoggingSettings
    arithmetic: ArithmeticSettings
    bench: BenchSettings
    kraft_reference: Optional[Path] = Field(
        default=None,
        description="YAML file with reference Kraft sums. None means no reference table.",
    )

    @model_validator(mode="after")
    def _check_reference(self) -> "Config":
        """Drop a reference path that does not exist instead of failing later."""
        if self.kraft_reference is not None and not self.kraft_reference.is_file():
            self.kraft_reference = None
        return self

    @staticmethod
    def _parse_bool(value: Optional[str]) -> bool:
        """Interpret common truthy representations used in env vars."""
        if value is None:
            return False
        return value.strip().lower() in {"1", "true", "yes", "y", "on"}

    @staticmethod
    def _parse_int(value: Optional[str], default: int) -> int:
        """Parse an integer env var, falling back to the default on garbage."""
        if value is None or not value.strip():
            return default
        try:
            return int(value.strip())
        except ValueError:
            return default

    @classmethod
    def from_env(cls) -> "Config":
        """Construct Config from environment variables with sensible defaults and validation.

        This does not configure logging by itself; see configure_logging().
        """
        debug = cls._parse_bool(os.environ.get("DEBUG"))
        logging_settings = LoggingSettings(debug=debug)

        raw_reference = (os.environ.get("HFSEQ_KRAFT_REFERENCE") or "").strip()
        reference = Path(raw_reference) if raw_reference else LOCAL_KRAFT_REFERENCE

        try:
            arithmetic = ArithmeticSettings(
                nat_bits=cls._parse_int(os.environ.get("HFSEQ_NAT_BITS"), DEFAULT_NAT_BITS),
                max_run_bits=cls._parse_int(os.environ.get("HFSEQ_MAX_RUN_BITS"), DEFAULT_MAX_RUN_BITS),
            )
            bench = BenchSettings(
                seed=cls._parse_int(os.environ.get("HFSEQ_SEED"), DEFAULT_SEED),
                trials=cls._parse_int(os.environ.get("HFSEQ_BENCH_TRIALS"), DEFAULT_TRIALS),
                mul_max_bits=cls._parse_int(os.environ.get("HFSEQ_MUL_MAX_BITS"), DEFAULT_MUL_MAX_BITS),
            )
            return cls(logging=logging_settings, arithmetic=arithmetic, bench=bench, kraft_reference=reference)
        except ValidationError as e:
            # Wrap Pydantic validation errors in a simpler exception for callers
            raise ValueError(f"Invalid configuration: {e}")


# Singleton instance and guard for one-time logging configuration
_CONFIG: Optional[Config] = None
_LOGGING_CONFIGURED: bool = False


def configure_logging(config: Config) -> None:
    """Configure root logger format and level exactly once.

    - Uses a more verbose format (file:line) in DEBUG level.
    - Keeps concise formatting otherwise.
    """
    global _LOGGING_CONFIGURED
    if _LOGGING_CONFIGURED:
        return

    level = config.logging.level_no
    root = logging.getLogger()
    if not root.handlers:
        # StreamHandler writes to stderr; stdout is reserved for results
        handler = logging.StreamHandler()
        if config.logging.debug:
            fmt = "%(asctime)s | %(levelname)s | %(name)s:%(lineno)d | %(message)s"
        else:
            fmt = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
        handler.setFormatter(logging.Formatter(fmt))
        root.addHandler(handler)
    root.setLevel(level)
    _LOGGING_CONFIGURED = True


def get_config() -> Config:
    """Return the process-wide Config singleton and ensure logging is configured."""
    global _CONFIG
    if _CONFIG is None:
        cfg = Config.from_env()
        configure_logging(cfg)
        _CONFIG = cfg
    return _CONFIG
