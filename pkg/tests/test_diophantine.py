"""Bounded-alphabet binomial equations, classes, and counting routes."""

from __future__ import annotations

import itertools
from math import comb

import pytest

from symsum import (
    BudgetExceeded,
    FoldedKey,
    GammaAlphabet,
    SolutionVector,
    TrivialForm,
    alternating_key,
    canonical_key,
    class_enumeration_metric,
    count_classes,
    count_solutions,
    direct_enumeration_metric,
    enumerate_classes,
    enumerate_solutions,
    enumerate_trivial_solutions,
    gamma_integral_metric,
    gamma_via_integral,
    is_trivial_solution,
    split_enumeration_metric,
    trivial_count,
    trivial_forms,
    zero_key,
)

EQUIVALENT_TO_ALTERNATING_N12 = (0, 0, 0, -2, 2, 0, 1, -2, 0, 0, 2, -2, 2)


# ---------------------------------------------------------------------------
# alphabets and solution vectors
# ---------------------------------------------------------------------------

class TestGammaAlphabet:
    def test_level_zero_is_signs_only(self):
        a = GammaAlphabet(0)
        assert a.members == (-1, 1)
        assert len(a) == 2
        assert 1 in a and -1 in a and 0 not in a

    def test_positive_levels(self):
        a = GammaAlphabet(2)
        assert a.bound == 2
        assert a.members == (-2, -1, 0, 1, 2)
        assert len(a) == 5
        assert 2 in a and -2 in a and 3 not in a
        assert len(GammaAlphabet(5)) == 33

    def test_negative_level_rejected(self):
        with pytest.raises(ValueError):
            GammaAlphabet(-1)


class TestSolutionVector:
    def test_accepts_solutions(self):
        SolutionVector(2, (1, -1, 1))
        SolutionVector(4, (0, 1, -2, 2, 0))
        SolutionVector(12, EQUIVALENT_TO_ALTERNATING_N12)

    def test_rejects_non_solutions(self):
        with pytest.raises(ValueError):
            SolutionVector(2, (1, 1, 1))
        with pytest.raises(ValueError):
            SolutionVector(2, (1, -1))
        with pytest.raises(ValueError):
            SolutionVector(0, (0,))

    def test_alphabet_membership(self):
        v = SolutionVector(4, (0, 1, -2, 2, 0))
        assert v.in_alphabet(GammaAlphabet(2))
        assert not v.in_alphabet(GammaAlphabet(1))

    def test_fold(self):
        half, center = SolutionVector(4, (1, 1, -1, 0, 1)).fold()
        assert half == (2, 1)
        assert center == -1
        half, center = SolutionVector(3, (1, -1, 1, -1)).fold()
        assert half == (0, 0)
        assert center is None


# ---------------------------------------------------------------------------
# class keys
# ---------------------------------------------------------------------------

class TestCanonicalKey:
    def test_even_example(self):
        key = canonical_key(SolutionVector(4, (1, 1, -1, 0, 1)))
        assert key.half == (2, 1)
        assert key.center == -1
        assert not key.is_zero

    def test_normalization_divides_and_signs(self):
        a = canonical_key(SolutionVector(4, (2, 1, -1, 0, 0)))
        b = canonical_key(SolutionVector(4, (-2, -1, 1, 0, 0)))
        assert a == b
        doubled = canonical_key(SolutionVector(4, (2, 2, -2, 0, 2)))
        assert doubled == canonical_key(SolutionVector(4, (1, 1, -1, 0, 1)))

    def test_reversal_and_negation_invariance(self):
        for v in enumerate_solutions(4, 2):
            rev = SolutionVector(4, tuple(reversed(v.entries)))
            neg = SolutionVector(4, tuple(-x for x in v.entries))
            assert canonical_key(rev) == canonical_key(v)
            assert canonical_key(neg) == canonical_key(v)

    def test_zero_and_alternating_keys(self):
        assert canonical_key(SolutionVector(3, (1, -1, 1, -1))) == zero_key(3)
        assert zero_key(4).is_zero
        assert alternating_key(4).half == (2, -2)
        assert alternating_key(4).center == 1
        assert alternating_key(3) == zero_key(3)

    def test_key_validation(self):
        with pytest.raises(ValueError):
            FoldedKey(4, (2, 1), -1, True)  # wrong zero flag
        with pytest.raises(ValueError):
            FoldedKey(4, (4, 2), -2, False)  # not normalized
        with pytest.raises(ValueError):
            FoldedKey(4, (2, 1), None, False)  # missing center
        with pytest.raises(ValueError):
            FoldedKey(4, (2, 2), -1, False)  # fails the equation

    def test_to_json(self):
        key = canonical_key(SolutionVector(4, (1, 1, -1, 0, 1)))
        assert key.to_json() == {"n": 4, "half": [2, 1], "center": -1, "zero": False}


# ---------------------------------------------------------------------------
# the always-present families
# ---------------------------------------------------------------------------

class TestTrivialForms:
    def test_antisymmetric_odd(self):
        v = SolutionVector(5, (1, -1, 0, 0, 1, -1))
        assert trivial_forms(v) == {TrivialForm.ANTISYMMETRIC_ODD}

    def test_alternating_even(self):
        v = SolutionVector(4, (2, -2, 2, -2, 2))
        assert trivial_forms(v) == {TrivialForm.ALTERNATING}

    def test_alternating_odd_is_also_antisymmetric(self):
        v = SolutionVector(5, tuple((-1) ** l for l in range(6)))
        assert trivial_forms(v) == {
            TrivialForm.ALTERNATING,
            TrivialForm.ANTISYMMETRIC_ODD,
        }

    def test_zero_vector_matches_both_applicable_shapes(self):
        assert trivial_forms(SolutionVector(4, (0,) * 5)) == {
            TrivialForm.ALTERNATING,
            TrivialForm.ANTISYMMETRIC_EVEN,
        }
        assert trivial_forms(SolutionVector(5, (0,) * 6)) == {
            TrivialForm.ALTERNATING,
            TrivialForm.ANTISYMMETRIC_ODD,
        }

    def test_sporadic_vector_matches_nothing(self):
        assert trivial_forms(SolutionVector(4, (0, 1, -2, 2, 0))) == frozenset()

    def test_equivalent_but_not_literal(self):
        v = SolutionVector(12, EQUIVALENT_TO_ALTERNATING_N12)
        assert trivial_forms(v) == frozenset()
        assert is_trivial_solution(v)
        assert canonical_key(v) == alternating_key(12)


class TestIsTrivial:
    def test_basic_verdicts(self):
        assert is_trivial_solution(SolutionVector(4, (0,) * 5))
        assert is_trivial_solution(SolutionVector(4, (1, -1, 1, -1, 1)))
        assert is_trivial_solution(SolutionVector(5, (1, 0, -2, 2, 0, -1)))
        assert not is_trivial_solution(SolutionVector(4, (0, 1, -2, 2, 0)))

    def test_odd_alternating_folds_to_zero(self):
        v = SolutionVector(5, tuple(2 * (-1) ** l for l in range(6)))
        assert canonical_key(v).is_zero
        assert is_trivial_solution(v)

    def test_matches_structural_forms_on_small_grids(self):
        # a key-level trivial solution is exactly one equivalent to a
        # structurally trivial vector
        for n, j in ((3, 1), (4, 1), (5, 1), (4, 2)):
            trivial_keys = {
                canonical_key(v) for v in enumerate_trivial_solutions(n, j)
            }
            for v in enumerate_solutions(n, j):
                assert is_trivial_solution(v) == (canonical_key(v) in trivial_keys)


class TestTrivialCount:
    def test_closed_form_values(self):
        assert trivial_count(3, 1) == 9
        assert trivial_count(5, 1) == 27
        assert trivial_count(2, 2) == 9
        assert trivial_count(6, 2) == 129

    def test_matches_deduplicated_enumeration(self):
        for n in range(1, 7):
            for j in range(1, 4):
                got = list(enumerate_trivial_solutions(n, j))
                assert len(got) == trivial_count(n, j)
                assert len({v.entries for v in got}) == len(got)
                alphabet = GammaAlphabet(j)
                for v in got:
                    assert v.in_alphabet(alphabet)
                    assert is_trivial_solution(v)

    def test_level_zero_has_no_trivial_vectors(self):
        with pytest.raises(ValueError):
            list(enumerate_trivial_solutions(4, 0))


# ---------------------------------------------------------------------------
# exact counting
# ---------------------------------------------------------------------------

class TestCountSolutions:
    def test_reference_values(self):
        assert count_solutions(3, 1) == 9
        assert count_solutions(5, 2) == 275
        assert count_solutions(7, 3) == 121921

    def test_single_position_pair(self):
        for j in range(1, 6):
            assert count_solutions(1, j) == (1 << j) + 1

    def test_matches_raw_product_scan(self):
        for n in range(1, 4):
            for j in range(0, 3):
                members = GammaAlphabet(j).members
                weights = [comb(n, l) for l in range(n + 1)]
                raw = sum(
                    1
                    for combo in itertools.product(members, repeat=n + 1)
                    if sum(x * w for x, w in zip(combo, weights)) == 0
                )
                assert count_solutions(n, j) == raw

    def test_level_zero_small_values(self):
        assert count_solutions(2, 0) == 2
        assert count_solutions(3, 0) == 4


class TestEnumerateSolutions:
    def test_small_exact_set(self):
        got = {v.entries for v in enumerate_solutions(2, 1)}
        assert got == {(0, 0, 0), (1, -1, 1), (-1, 1, -1), (1, 0, -1), (-1, 0, 1)}

    def test_lexicographic_order(self):
        entries = [v.entries for v in enumerate_solutions(4, 1)]
        assert entries == sorted(entries)

    def test_counts_match(self):
        assert sum(1 for _ in enumerate_solutions(4, 2)) == count_solutions(4, 2) == 103

    def test_methods_agree(self):
        direct = [v.entries for v in enumerate_solutions(4, 2, method="direct")]
        split = [v.entries for v in enumerate_solutions(4, 2, method="split")]
        assert direct == sorted(split)
        assert len(direct) == len(split)

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_solutions(10, 3, budget=10))
        with pytest.raises(BudgetExceeded):
            list(enumerate_solutions(4, 2, budget=10, method="direct"))

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_solutions(2, 1, method="bogus"))


class TestClasses:
    def test_reference_counts(self):
        assert count_classes(4, 2) == 5
        assert count_classes(8, 1) == 7
        assert count_classes(8, 3) == 389

    def test_explicit_class_list(self):
        reps = (
            (0, 0, 0, 0, 0),
            (0, 1, -2, 2, 0),
            (2, -2, 1, 0, 0),
            (2, 1, -1, 0, 0),
            (2, -1, 0, 0, 2),
        )
        want = {canonical_key(SolutionVector(4, r)) for r in reps}
        got = enumerate_classes(4, 2)
        assert set(got) == want

    def test_representatives_are_realizable(self):
        for n, j in ((3, 1), (4, 2), (5, 2), (6, 1)):
            alphabet = GammaAlphabet(j)
            for key, rep in enumerate_classes(n, j).items():
                assert rep.n == n
                assert rep.in_alphabet(alphabet)
                assert canonical_key(rep) == key

    def test_classes_cover_exactly_the_solutions(self):
        for n, j in ((3, 1), (4, 2), (5, 1), (6, 1)):
            keys = {canonical_key(v) for v in enumerate_solutions(n, j)}
            assert keys == set(enumerate_classes(n, j))

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            enumerate_classes(10, 3, budget=10)


class TestIntegralRecount:
    def test_reference_values(self):
        assert gamma_via_integral(1, 1) == 3
        assert gamma_via_integral(2, 1) == 5
        assert gamma_via_integral(4, 2) == 103

    def test_agrees_with_forward_count(self):
        for n in range(1, 7):
            for j in range(1, 3):
                assert gamma_via_integral(n, j) == count_solutions(n, j)

    def test_level_zero_rejected(self):
        with pytest.raises(ValueError):
            gamma_via_integral(4, 0)

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            gamma_via_integral(12, 4, budget=10)


class TestMetrics:
    def test_formulas(self):
        assert direct_enumeration_metric(4, 2) == 5 ** 5
        assert split_enumeration_metric(4, 2) == 5 ** 3
        assert direct_enumeration_metric(3, 0) == 2 ** 4
        assert class_enumeration_metric(4, 2) == 9 ** 2 * 5
        assert class_enumeration_metric(5, 2) == 9 ** 3
        assert gamma_integral_metric(4, 2) == 3 ** 5
