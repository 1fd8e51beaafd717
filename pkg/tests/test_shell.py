import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from engine.errors import CapacityError, InvalidPermutationError, InvalidSequenceError
from engine.gapseq import GapSequence, sequences_for_n
from engine.shell import (
    STATE_DTYPE,
    Permutation,
    after_first_pass,
    all_permutations,
    evaluate_passes,
    full_space_costs,
    identity_permutation,
    max_comparisons_full,
    reversed_permutation,
    shellsort_count,
)


@st.composite
def permutation_and_sequence(draw, max_n=9):
    n = draw(st.integers(min_value=2, max_value=max_n))
    values = draw(st.permutations(range(1, n + 1)))
    extra = draw(st.sets(st.integers(min_value=2, max_value=n - 1), max_size=3)) if n > 2 else set()
    return Permutation(tuple(values)), GapSequence(tuple(extra | {1}))


def test_reversed_costs_n_choose_2_with_insertion_sort():
    assert shellsort_count(reversed_permutation(6), GapSequence.of(1)).total_comparisons == 15


def test_sorted_input_costs_n_minus_one():
    assert shellsort_count(identity_permutation(6), GapSequence.of(1)).total_comparisons == 5


def test_trace_records_each_pass():
    p = Permutation.of(6, 5, 4, 3, 2, 1)
    trace = shellsort_count(p, GapSequence.of(1, 4))
    assert [gap for gap, _ in trace.per_pass] == [4, 1]
    assert trace.total_comparisons == sum(c for _, c in trace.per_pass)
    assert trace.intermediate_after_first_pass == Permutation.of(2, 1, 4, 3, 6, 5)
    assert trace.result == identity_permutation(6)


@given(permutation_and_sequence())
def test_shellsort_sorts(case):
    p, s = case
    trace = shellsort_count(p, s)
    assert trace.result == identity_permutation(p.n)
    assert p.n - 1 <= trace.total_comparisons


@given(permutation_and_sequence())
def test_vectorised_passes_match_scalar_count(case):
    p, s = case
    states = np.array([p.values], dtype=STATE_DTYPE)
    totals = evaluate_passes(states, tuple(s))
    assert int(totals[0]) == shellsort_count(p, s).total_comparisons
    assert states[0].tolist() == list(range(1, p.n + 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_vectorised_passes_exhaustively(n):
    for s in sequences_for_n(n):
        costs = full_space_costs(n, s)
        expected = [
            shellsort_count(Permutation(values), s).total_comparisons
            for values in itertools.permutations(range(1, n + 1))
        ]
        assert costs.tolist() == expected


def test_after_first_pass_only_runs_the_largest_gap():
    p = Permutation.of(5, 4, 3, 2, 1)
    assert after_first_pass(p, GapSequence.of(1, 2)) == Permutation.of(1, 2, 3, 4, 5)
    assert after_first_pass(p, GapSequence.of(1, 3)) == Permutation.of(2, 1, 3, 5, 4)


def test_all_permutations_is_lexicographic():
    block = all_permutations(3)
    assert block.tolist() == [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]


@pytest.mark.parametrize(
    "n, increments, expected",
    [(6, (1,), 15), (6, (1, 4), 14), (7, (1, 4, 6), 18), (8, (1, 5, 7), 23), (9, (1, 3, 4), 29)],
)
def test_full_space_maxima(n, increments, expected):
    assert max_comparisons_full(n, GapSequence(increments)) == expected


def test_full_space_respects_the_brute_force_bound():
    with pytest.raises(CapacityError) as info:
        max_comparisons_full(12, GapSequence.of(1))
    assert info.value.cardinality == 479001600


def test_sequence_must_fit_n():
    with pytest.raises(InvalidSequenceError):
        shellsort_count(identity_permutation(4), GapSequence.of(1, 4))


@pytest.mark.parametrize("values", [(1, 1, 2), (0, 1, 2), (1, 2, 4)])
def test_invalid_permutations(values):
    with pytest.raises(InvalidPermutationError):
        Permutation(values)
