"""Tests for the system_t package: type literals, succ_t/pred_t, the merged
bidirectional relation, counting, the HFSeq <-> TType isomorphism and the
composed arithmetic.
"""

import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
from hypothesis import HealthCheck, given, settings

from errors import DomainError, NatRangeError, ParseError, UnderflowError, UsageError
from hfs_arith import Ordering, enumerate_hfseq, pred, succ
from natseq import EMPTY, ONE, HFSeq, fits_nat, nat_to_hfseq, parse_hfseq
from system_t import (
    E,
    Direction,
    add_t,
    arrow,
    cmp_t,
    enumerate_t,
    hfseq_to_type,
    mul_t,
    parse_type,
    pred_t,
    print_type,
    sp_infer,
    sp_step,
    sub_t,
    succ_t,
    t2n,
    type_to_hfseq,
)
from tests.strategies import trees, types

ONE_T = arrow(E, E)
TWO_T = arrow(ONE_T, E)
THREE_T = arrow(E, ONE_T)
FOUR_T = arrow(TWO_T, E)
DEEP = 2000

PROPERTY_SETTINGS = settings(
    max_examples=1000,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)


# ======================================================================
# Literals
# ======================================================================

class TestTypeLiterals:
    """parse_type / print_type."""

    def test_print_examples(self):
        assert print_type(E) == "e"
        assert print_type(arrow(E, arrow(E, E))) == "(e->e->e)"
        assert print_type(arrow(arrow(arrow(E, E), E), E)) == "(((e->e)->e)->e)"

    def test_parse_examples(self):
        assert parse_type("e") == E
        assert parse_type("(e->e->e)") == THREE_T
        assert parse_type("e -> e -> e") == THREE_T
        assert parse_type("(((e->e)->e)->e)") == FOUR_T
        assert parse_type("((e))") == E

    def test_arrow_is_right_associative(self):
        assert parse_type("e->e->e") == arrow(E, arrow(E, E))
        assert parse_type("(e->e)->e") == TWO_T

    @pytest.mark.parametrize(
        "text, position",
        [
            ("", 0),
            ("x", 0),
            ("(e->e", 5),
            ("e->", 3),
            ("e e", 2),
            ("e-e", 1),
            (")", 0),
        ],
    )
    def test_parse_errors_carry_position(self, text, position):
        with pytest.raises(ParseError) as excinfo:
            parse_type(text)
        assert excinfo.value.position == position

    @PROPERTY_SETTINGS
    @given(types(max_leaves=64))
    def test_parse_print_round_trip(self, t):
        assert parse_type(print_type(t)) == t

    def test_deeply_nested_literals(self):
        """Nesting thousands of levels deep parses and prints without recursion limits."""
        assert parse_type("(" * DEEP + "e" + ")" * DEEP) == E

        left_nested = E
        for _ in range(DEEP):
            left_nested = arrow(left_nested, E)
        text = print_type(left_nested)
        assert text.startswith("(" * DEEP + "e->e)")
        assert parse_type(text) == left_nested

        right_chain = parse_type("e->" * DEEP + "e")
        assert print_type(right_chain) == "(" + "e->" * DEEP + "e)"

    def test_deep_types_compare_and_hash_by_structure(self):
        a, b = E, E
        for _ in range(DEEP):
            a = arrow(a, arrow(E, E))
            b = arrow(b, arrow(E, E))
        assert a is not b
        assert a == b
        assert hash(a) == hash(b)
        assert a != arrow(E, a)
        assert len({a, b}) == 1

    def test_repr(self):
        assert repr(THREE_T) == "TType('(e->e->e)')"
        assert str(E) == "e"


# ======================================================================
# Successor / predecessor
# ======================================================================

class TestSuccPredT:
    """succ_t / pred_t."""

    def test_succ_examples(self):
        assert succ_t(E) == ONE_T
        assert succ_t(ONE_T) == TWO_T
        assert succ_t(TWO_T) == THREE_T
        assert succ_t(THREE_T) == FOUR_T

    def test_pred_examples(self):
        assert pred_t(FOUR_T) == THREE_T
        assert pred_t(ONE_T) == E

    def test_pred_of_e(self):
        with pytest.raises(DomainError):
            pred_t(E)

    def test_stream_prefix(self):
        assert [print_type(t) for t in enumerate_t(4)] == ["e", "(e->e)", "((e->e)->e)", "(e->e->e)"]
        assert enumerate_t(0) == []

    def test_stream_matches_hfseq_stream(self):
        """Element n of the type stream encodes n for every n up to 4096."""
        types_stream = enumerate_t(4097)
        trees_stream = enumerate_hfseq(4097)
        for t, tree in zip(types_stream, trees_stream):
            assert type_to_hfseq(t) == tree
            assert pred_t(succ_t(t)) == t

    def test_t2n(self):
        assert t2n(E) == 0
        assert t2n(FOUR_T) == 4
        stream = enumerate_t(4097)
        for n in list(range(0, 513)) + list(range(513, 4097, 97)):
            assert t2n(stream[n]) == n

    def test_t2n_range_error(self):
        tall = hfseq_to_type(parse_hfseq("[[[[[[[]]]]]]]"))
        with pytest.raises(NatRangeError):
            t2n(tall)

    def test_long_right_chain(self):
        """2**1500 - 1 is a chain of 1500 e heads; both steps walk it without recursing."""
        tree = HFSeq.prepend_empties(1500, EMPTY)
        t = hfseq_to_type(tree)
        up = succ_t(t)
        assert up == hfseq_to_type(succ(tree))
        assert pred_t(up) == t
        assert pred_t(t) == hfseq_to_type(pred(tree))
        assert sp_step(Direction.UP, t) == up
        assert sp_step(Direction.DOWN, up) == t
        assert type_to_hfseq(up) == succ(tree)


class TestBidirectional:
    """sp_step / sp_infer."""

    def test_step_examples(self):
        assert sp_step(Direction.UP, E) == ONE_T
        assert sp_step(Direction.DOWN, TWO_T) == ONE_T
        assert sp_step("up", ONE_T) == TWO_T

    def test_step_down_from_e(self):
        with pytest.raises(DomainError):
            sp_step(Direction.DOWN, E)

    def test_direction_flip(self):
        assert Direction.UP.flipped is Direction.DOWN
        assert Direction.DOWN.flipped is Direction.UP

    def test_infer_examples(self):
        assert sp_infer(y=TWO_T) == ONE_T
        assert sp_infer(x=ONE_T) == TWO_T
        assert sp_infer(ONE_T, TWO_T) is True
        assert sp_infer(E, E) is False

    def test_infer_needs_an_argument(self):
        with pytest.raises(UsageError):
            sp_infer()
        with pytest.raises(DomainError):
            sp_infer(y=E)

    def test_agrees_with_one_way_relations(self):
        for t in enumerate_t(2049):
            up = sp_step(Direction.UP, t)
            assert up == succ_t(t)
            assert sp_step(Direction.DOWN, up) == t
            if t != E:
                assert sp_step(Direction.DOWN, t) == pred_t(t)

    @PROPERTY_SETTINGS
    @given(types(max_leaves=24))
    def test_up_is_succ_on_random_types(self, t):
        up = sp_step(Direction.UP, t)
        assert up == succ_t(t)
        assert sp_step(Direction.DOWN, up) == t


# ======================================================================
# Isomorphism with HFSeq
# ======================================================================

class TestConversion:
    """hfseq_to_type / type_to_hfseq."""

    def test_examples(self):
        assert hfseq_to_type(EMPTY) == E
        assert hfseq_to_type(ONE) == ONE_T
        assert hfseq_to_type(nat_to_hfseq(3)) == THREE_T
        assert type_to_hfseq(THREE_T) == parse_hfseq("[[],[]]")

    @PROPERTY_SETTINGS
    @given(trees(max_leaves=24).filter(fits_nat))
    def test_functor_property(self, t):
        """Converting then stepping equals stepping then converting."""
        assert hfseq_to_type(succ(t)) == succ_t(hfseq_to_type(t))

    @PROPERTY_SETTINGS
    @given(trees(max_leaves=32))
    def test_inverse_on_trees(self, t):
        assert type_to_hfseq(hfseq_to_type(t)) == t

    @PROPERTY_SETTINGS
    @given(types(max_leaves=32))
    def test_inverse_on_types(self, t):
        assert hfseq_to_type(type_to_hfseq(t)) == t

    def test_deep_tree_converts(self):
        """A 1500-level singleton tower maps to a 1499-level left-nested type and back."""
        tower = parse_hfseq("[" * 1500 + "]" * 1500)
        t = hfseq_to_type(tower)
        depth = 0
        while not t.is_leaf:
            assert t.right == E
            t = t.left
            depth += 1
        assert depth == 1499
        assert type_to_hfseq(hfseq_to_type(tower)) == tower


class TestComposedArithmetic:
    """add_t / mul_t / sub_t / cmp_t."""

    def test_small_values(self):
        assert add_t(ONE_T, THREE_T) == FOUR_T
        assert mul_t(TWO_T, TWO_T) == FOUR_T
        assert sub_t(FOUR_T, ONE_T) == THREE_T
        assert cmp_t(THREE_T, FOUR_T) is Ordering.LT

    def test_sub_underflow(self):
        with pytest.raises(UnderflowError):
            sub_t(ONE_T, TWO_T)
