"""Truth tables, input syntax, weight sums, and symmetric evaluation."""

from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsum import (
    AnfSyntaxError,
    BooleanFunction,
    WeightProfile,
    all_functions,
    all_profiles,
    anf_parse,
    anf_to_function,
    exp_sum_bruteforce,
    function_to_anf,
    symmetric_function,
    symmetric_sigma_eval,
    weight_profile,
    xor_functions,
)

from conftest import function_from_profile

ROTATION = "x1*x2 + x2*x3 + x3*x4 + x4*x5 + x5*x1"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class TestAnfParse:
    def test_single_variable(self):
        assert anf_parse("x1").terms == frozenset({frozenset({1})})

    def test_rotation_has_five_pair_monomials(self):
        expr = anf_parse(ROTATION)
        assert len(expr.terms) == 5
        assert all(len(mono) == 2 for mono in expr.terms)
        assert expr.max_index == 5

    def test_xor_cancellation(self):
        assert anf_parse("x1 + x1").terms == frozenset()

    def test_constant_one(self):
        assert anf_parse("1").terms == frozenset({frozenset()})

    def test_whitespace_ignored(self):
        assert anf_parse(" x1 * x2 +x3 ") == anf_parse("x1*x2+x3")

    @pytest.mark.parametrize("bad", ["", "x", "x1 +", "* x1", "x1 x2", "y1", "x1**x2"])
    def test_syntax_errors_carry_position(self, bad):
        with pytest.raises(AnfSyntaxError) as err:
            anf_parse(bad)
        assert err.value.position >= 0

    @pytest.mark.parametrize("bad", ["x0", "x25"])
    def test_variable_index_bounds(self, bad):
        with pytest.raises(AnfSyntaxError):
            anf_parse(bad)

    def test_str_round_trip(self):
        for text in ("x1*x2 + x3", "1", "0", "x2"):
            expr = anf_parse(text) if text != "0" else anf_parse("x1+x1")
            assert anf_parse(str(expr)) == expr if text != "0" else str(expr) == "0"


class TestAnfToFunction:
    def test_single_variable_table(self):
        f = anf_to_function(anf_parse("x1"), 1)
        assert f.bits() == (0, 1)

    def test_and_gate_table(self):
        f = anf_to_function(anf_parse("x1*x2"), 2)
        assert f.bits() == (0, 0, 0, 1)

    def test_zero_function_table(self):
        f = anf_to_function(anf_parse("x1+x1"), 2)
        assert f.bits() == (0, 0, 0, 0)

    def test_rejects_undersized_variable_count(self):
        with pytest.raises(ValueError):
            anf_to_function(anf_parse("x3"), 2)

    def test_rejects_oversized_variable_count(self):
        with pytest.raises(ValueError):
            anf_to_function(anf_parse("x1"), 25)


# ---------------------------------------------------------------------------
# sign sums and weight profiles
# ---------------------------------------------------------------------------

class TestExpSumBruteforce:
    def test_single_variable_balanced(self):
        assert exp_sum_bruteforce(anf_to_function(anf_parse("x1"), 1)) == 0

    def test_rotation_balanced(self):
        assert exp_sum_bruteforce(anf_to_function(anf_parse(ROTATION), 5)) == 0

    def test_and_gate(self):
        assert exp_sum_bruteforce(anf_to_function(anf_parse("x1*x2"), 2)) == 2


class TestWeightProfile:
    def test_single_variable(self):
        f = anf_to_function(anf_parse("x1"), 1)
        assert weight_profile(f).values == (1, -1)

    def test_and_gate(self):
        f = anf_to_function(anf_parse("x1*x2"), 2)
        assert weight_profile(f).values == (1, 2, -1)

    def test_parity_of_nine(self):
        text = "+".join(f"x{i}" for i in range(1, 10))
        f = anf_to_function(anf_parse(text), 9)
        p = weight_profile(f)
        assert p.values == tuple((-1) ** m * comb(9, m) for m in range(10))
        assert p.total == 0

    @pytest.mark.parametrize(
        "j,values",
        [(1, (1, 0)), (1, (2, -1)), (2, (1, 3, -1)), (2, (1, 2, 3))],
    )
    def test_invalid_profiles_rejected(self, j, values):
        with pytest.raises(ValueError):
            WeightProfile(j, values)

    def test_constant_zero_profile(self):
        p = WeightProfile.constant_zero()
        assert p.j == 0 and p.values == (1,)


# ---------------------------------------------------------------------------
# symmetric evaluation
# ---------------------------------------------------------------------------

class TestSymmetricSigmaEval:
    def test_top_degree_at_full_weight(self):
        assert symmetric_sigma_eval(4, (3,), 0b0111) == 1

    def test_mixed_degrees_weight_two(self):
        # C(2,2) + C(2,1) = 3, odd
        assert symmetric_sigma_eval(3, (1, 2), 0b101) == 1

    def test_weight_zero_is_zero(self):
        for degrees in ((1,), (2, 3), (4,)):
            assert symmetric_sigma_eval(6, degrees, 0) == 0

    @pytest.mark.parametrize("n,degrees", [(5, (2,)), (6, (1, 4)), (6, (3, 5, 6))])
    def test_against_subset_counting(self, n, degrees):
        # parity of the number of k-subsets of the support, summed over k
        for x in range(1 << n):
            support = [i for i in range(n) if (x >> i) & 1]
            count = sum(
                sum(1 for _ in itertools.combinations(support, k)) for k in degrees
            )
            assert symmetric_sigma_eval(n, degrees, x) == count % 2

    def test_symmetric_function_table_matches_eval(self):
        f = symmetric_function(6, (2, 3))
        for x in range(64):
            assert f.value(x) == symmetric_sigma_eval(6, (2, 3), x)
        assert f.restrict_is_symmetric()


# ---------------------------------------------------------------------------
# serialization and enumeration helpers
# ---------------------------------------------------------------------------

class TestSerialization:
    def test_hex_round_trip(self):
        f = anf_to_function(anf_parse(ROTATION), 5)
        assert BooleanFunction.from_hex(5, f.to_hex()) == f

    def test_from_bits_round_trip(self):
        f = anf_to_function(anf_parse("x1*x2+x3"), 3)
        assert BooleanFunction.from_bits(f.bits()) == f


class TestEnumeration:
    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_profiles_of_functions_exactly_fill_the_lattice(self, j):
        from_functions = {weight_profile(f).values for f in all_functions(j)}
        lattice = {p.values for p in all_profiles(j)}
        assert from_functions == lattice

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_every_profile_is_realizable(self, j):
        for p in all_profiles(j):
            f = function_from_profile(p)
            assert weight_profile(f).values == p.values


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

@st.composite
def boolean_functions(draw, max_j: int = 4):
    j = draw(st.integers(1, max_j))
    table = draw(st.integers(0, (1 << (1 << j)) - 1))
    return BooleanFunction(j, table)


@given(boolean_functions())
@settings(max_examples=200, deadline=None)
def test_profile_sums_to_sign_sum(f):
    p = weight_profile(f)
    assert sum(p.values) == exp_sum_bruteforce(f)
    for m, v in enumerate(p.values):
        assert abs(v) <= comb(f.j, m)
        assert (v - comb(f.j, m)) % 2 == 0


@given(boolean_functions())
@settings(max_examples=200, deadline=None)
def test_mobius_round_trip(f):
    assert anf_to_function(function_to_anf(f), f.j) == f


@given(boolean_functions(max_j=3), boolean_functions(max_j=3))
@settings(max_examples=100, deadline=None)
def test_xor_adds_tables(f, g):
    if f.j != g.j:
        return
    h = xor_functions(f, g)
    for x in range(f.size):
        assert h.value(x) == f.value(x) ^ g.value(x)
