"""Tests for the natseq package: pairing, N <-> [N], the HFSeq type, the tree
literal grammar and the ranking bijection N <-> HFSeq.
"""

import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
from hypothesis import HealthCheck, given, settings

from errors import DomainError, NatRangeError, ParseError
from natseq import (
    EMPTY,
    ONE,
    HFSeq,
    cons_nat,
    fits_nat,
    format_hfseq,
    hd_nat,
    hfseq_to_nat,
    is_null,
    list_to_nat,
    nat_to_hfseq,
    nat_to_list,
    parse_hfseq,
    rank,
    tl_nat,
    unrank,
)
from tests.strategies import trees

TREE_2012 = "[[[[]]],[],[],[[]],[],[],[],[]]"


# ======================================================================
# Pairing
# ======================================================================

class TestPairing:
    """cons_nat / hd_nat / tl_nat / is_null."""

    def test_cons_examples(self):
        assert cons_nat(0, 0) == 1
        assert cons_nat(1, 10) == 42
        assert cons_nat(2, 251) == 2012

    def test_hd_tl_examples(self):
        assert hd_nat(1) == 0 and tl_nat(1) == 0
        assert hd_nat(2012) == 2 and tl_nat(2012) == 251

    def test_is_null(self):
        assert is_null(0) is True
        assert is_null(7) is False

    def test_hd_of_zero_is_domain_error(self):
        with pytest.raises(DomainError):
            hd_nat(0)
        with pytest.raises(DomainError):
            tl_nat(0)

    def test_negative_is_domain_error(self):
        with pytest.raises(DomainError):
            cons_nat(-1, 0)

    def test_cons_overflow_is_range_error(self):
        """2**64 does not fit in a 64-bit Nat."""
        with pytest.raises(NatRangeError):
            cons_nat(64, 0)
        assert cons_nat(63, 0) == 1 << 63

    def test_cons_hd_tl_inverse(self):
        for n in range(1, 5000):
            assert cons_nat(hd_nat(n), tl_nat(n)) == n

    def test_hd_tl_of_cons(self):
        for x in range(0, 40):
            for y in range(0, 200, 7):
                z = cons_nat(x, y)
                assert hd_nat(z) == x
                assert tl_nat(z) == y


class TestNatList:
    """nat_to_list / list_to_nat."""

    def test_2012(self):
        assert nat_to_list(2012) == [2, 0, 0, 1, 0, 0, 0, 0]

    def test_zero_and_42(self):
        assert nat_to_list(0) == []
        assert list_to_nat([]) == 0
        assert nat_to_list(42) == [1, 1, 1]

    def test_round_trip_exhaustive(self):
        for n in range(0, 1 << 16):
            assert list_to_nat(nat_to_list(n)) == n

    def test_list_to_nat_overflow(self):
        with pytest.raises(NatRangeError):
            list_to_nat([40, 40])


# ======================================================================
# HFSeq value type
# ======================================================================

class TestHFSeq:
    """Canonical form, views and equality."""

    def test_runs_are_merged(self):
        """Building the same tree child by child or all at once gives equal values."""
        a = HFSeq.of(EMPTY, EMPTY, EMPTY)
        b = HFSeq.prepend(EMPTY, HFSeq.prepend_empties(2, EMPTY))
        assert a == b
        assert hash(a) == hash(b)
        assert a.ones == 3

    def test_node_count(self):
        t = parse_hfseq(TREE_2012)
        assert t.node_count == 12
        assert len(list(t.children())) == 8
        assert EMPTY.node_count == 1

    def test_children_order(self):
        t = parse_hfseq("[[],[[]],[]]")
        assert [format_hfseq(c) for c in t.children()] == ["[]", "[[]]", "[]"]

    def test_inequality(self):
        assert parse_hfseq("[[],[]]") != parse_hfseq("[[[]]]")
        assert ONE != EMPTY

    def test_repr(self):
        assert repr(ONE) == "HFSeq('[[]]')"

    def test_str_is_canonical_literal(self):
        assert str(nat_to_hfseq(3)) == "[[],[]]"


# ======================================================================
# Literal grammar
# ======================================================================

class TestLiteral:
    """parse_hfseq / format_hfseq."""

    def test_parse_ignores_whitespace(self):
        assert parse_hfseq(" [ [ ] , [ ] ] ") == parse_hfseq("[[],[]]")

    def test_format_has_no_whitespace(self):
        assert format_hfseq(parse_hfseq("[ [],\n[[ ]] ]")) == "[[],[[]]]"

    @pytest.mark.parametrize(
        "text, position",
        [
            ("", 0),
            ("[", 1),
            ("]", 0),
            ("[[]", 3),
            ("[],", 2),
            ("[,[]]", 1),
            ("[[],]", 4),
            ("[[][]]", 3),
            ("[x]", 1),
        ],
    )
    def test_parse_errors_carry_position(self, text, position):
        with pytest.raises(ParseError) as excinfo:
            parse_hfseq(text)
        assert excinfo.value.position == position

    def test_deep_literal_does_not_recurse(self):
        depth = 20000
        t = parse_hfseq("[" * depth + "]" * depth)
        assert t.node_count == depth
        assert format_hfseq(t) == "[" * depth + "]" * depth


# ======================================================================
# Ranking
# ======================================================================

class TestRanking:
    """nat_to_hfseq / hfseq_to_nat and the generic combinators."""

    def test_2012(self):
        assert format_hfseq(nat_to_hfseq(2012)) == TREE_2012
        assert hfseq_to_nat(parse_hfseq(TREE_2012)) == 2012

    def test_small_values(self):
        assert nat_to_hfseq(0) == EMPTY
        assert format_hfseq(nat_to_hfseq(3)) == "[[],[]]"

    def test_round_trip_exhaustive(self):
        for n in range(0, 1 << 16):
            assert hfseq_to_nat(nat_to_hfseq(n)) == n

    def test_generic_combinators_agree(self):
        for n in range(0, 3000):
            t = unrank(nat_to_list, n)
            assert t == nat_to_hfseq(n)
            assert rank(list_to_nat, t) == n

    def test_range_error_for_tall_tree(self):
        """Seven nested brackets encode 2**65536."""
        tall = parse_hfseq("[[[[[[[]]]]]]]")
        assert fits_nat(tall) is False
        with pytest.raises(NatRangeError):
            hfseq_to_nat(tall)

    @settings(max_examples=1000, derandomize=True, suppress_health_check=[HealthCheck.filter_too_much])
    @given(trees(max_leaves=16).filter(fits_nat))
    def test_structural_inverse_on_random_trees(self, t):
        assert nat_to_hfseq(hfseq_to_nat(t)) == t
