"""Tests for the dyck package: the bit-code bijection, its text forms, parsize
and the Kraft analytics.
"""

import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from errors import DomainError, ParseError
from dyck import (
    KraftReport,
    decode,
    encode,
    format_code,
    is_dyck_prime,
    kraft_check,
    kraft_sum,
    kraft_term,
    parse_code,
    parsize,
    prefix_free_check,
)
from natseq import EMPTY, nat_to_hfseq, parse_hfseq
from tests.strategies import trees

KRAFT_TABLE = {
    10: 0.364258,
    100: 0.382935,
    1000: 0.390383,
    2000: 0.391615,
    3000: 0.392292,
    4000: 0.392598,
}


# ======================================================================
# Codec
# ======================================================================

class TestCodec:
    """encode / decode."""

    def test_examples(self):
        assert encode(parse_hfseq("[[],[]]")) == (0, 0, 1, 0, 1, 1)
        assert encode(EMPTY) == (0, 1)
        assert decode([0, 0, 1, 0, 1, 1]) == parse_hfseq("[[],[]]")
        assert decode((0, 1)) == EMPTY

    def test_2012(self):
        code = encode(nat_to_hfseq(2012))
        assert format_code(code) == "000011101010011010101011"
        assert decode(code) == nat_to_hfseq(2012)

    @pytest.mark.parametrize(
        "code, position",
        [
            ([], 0),
            ([0, 1, 0, 1], 2),
            ([1], 0),
            ([0, 0, 1], 3),
            ([0, 2, 1], 1),
            ([0, True], 1),
        ],
    )
    def test_decode_errors_carry_position(self, code, position):
        with pytest.raises(ParseError) as excinfo:
            decode(code)
        assert excinfo.value.position == position

    def test_codes_are_dyck_primes(self):
        for n in range(0, 2048):
            assert is_dyck_prime(encode(nat_to_hfseq(n)))

    def test_is_dyck_prime_rejects(self):
        assert is_dyck_prime((0, 1, 0, 1)) is False
        assert is_dyck_prime((0, 0, 1)) is False
        assert is_dyck_prime((1, 0)) is False
        assert is_dyck_prime(()) is False

    def test_deep_tree_does_not_recurse(self):
        depth = 20000
        t = parse_hfseq("[" * depth + "]" * depth)
        code = encode(t)
        assert code == (0,) * depth + (1,) * depth
        assert decode(code) == t

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(trees(max_leaves=64))
    def test_round_trip(self, t):
        code = encode(t)
        assert len(code) == 2 * t.node_count
        assert decode(code) == t


class TestTextForms:
    """parse_code / format_code."""

    def test_parens_alias(self):
        assert parse_code("(()())") == (0, 0, 1, 0, 1, 1)
        assert parse_code(" 0 01 011 ") == (0, 0, 1, 0, 1, 1)
        assert format_code((0, 0, 1, 0, 1, 1), parens=True) == "(()())"
        assert format_code((0, 0, 1, 0, 1, 1)) == "001011"

    def test_invalid_character(self):
        with pytest.raises(ParseError) as excinfo:
            parse_code("00x1")
        assert excinfo.value.position == 2


# ======================================================================
# Code lengths and Kraft sums
# ======================================================================

class TestParsize:
    """parsize."""

    def test_examples(self):
        assert parsize(0) == 2
        assert parsize(9) == 10
        assert parsize(2012) == 24

    def test_even_and_at_least_two(self):
        for n in range(0, 1024):
            size = parsize(n)
            assert size >= 2
            assert size % 2 == 0


class TestKraft:
    """kraft_term / kraft_sum / kraft_check."""

    def test_term_and_small_sum(self):
        assert kraft_term(0) == 0.25
        assert kraft_sum(1) == 0.25
        assert kraft_sum(10) == 0.3642578125

    @pytest.mark.parametrize("m, expected", sorted(KRAFT_TABLE.items()))
    def test_reference_table(self, m, expected):
        assert kraft_sum(m) == pytest.approx(expected, abs=1e-6)

    def test_monotone_and_bounded(self):
        previous = 0.0
        for m in range(1, 600, 37):
            current = kraft_sum(m)
            assert current > previous
            assert current <= 1.0
            previous = current

    def test_sum_needs_positive_m(self):
        with pytest.raises(DomainError):
            kraft_sum(0)

    def test_report(self):
        report = kraft_check(10)
        assert report.m == 10
        assert report.holds is True
        assert report.sum == 0.3642578125

    def test_report_is_frozen(self):
        report = KraftReport(m=1, sum=0.25, holds=True)
        with pytest.raises(ValidationError):
            report.m = 2

    def test_report_rejects_zero_m(self):
        with pytest.raises(ValidationError):
            KraftReport(m=0, sum=0.0, holds=True)


class TestPrefixFree:
    """prefix_free_check."""

    def test_first_codes(self):
        assert prefix_free_check(2) is True
        assert prefix_free_check(512) is True

    def test_needs_two_codes(self):
        with pytest.raises(DomainError):
            prefix_free_check(1)
