import json
from fractions import Fraction

import pytest

from engine.errors import CapacityError
from engine.gapseq import GapSequence
from engine.oracle import (
    average_history,
    compare_distributions,
    distribution,
    histogram_frame,
    mean_comparisons,
    search_min_average,
)
from engine.published import PUBLISHED_DISTRIBUTIONS


@pytest.mark.parametrize("key", sorted(PUBLISHED_DISTRIBUTIONS))
def test_published_histograms(key):
    n, increments = key
    hist = distribution(n, GapSequence(increments))
    assert hist.bins == PUBLISHED_DISTRIBUTIONS[key]
    assert hist.total == 720


def test_exact_means():
    assert mean_comparisons(6, GapSequence.of(1)) == Fraction(221, 20)
    assert mean_comparisons(6, GapSequence.of(1, 4)) == Fraction(319, 30)


def test_histogram_frame_and_exports():
    hist = distribution(6, GapSequence.of(1, 4))
    frame = histogram_frame(hist)
    assert frame["comparisons"].tolist() == list(range(7, 15))
    assert frame["frequency"].sum() == 720
    assert hist.to_csv().splitlines()[:2] == ["comparisons,frequency", "7,8"]
    doc = json.loads(hist.to_json())
    assert doc["sequence"] == [1, 4]
    assert doc["bins"]["11"] == 192
    assert doc["mean"] == "319/30"


def test_compare_distributions_fills_zeros():
    first = distribution(6, GapSequence.of(1))
    second = distribution(6, GapSequence.of(1, 4))
    frame = compare_distributions(first, second)
    assert list(frame.columns) == ["comparisons", "1", "1, 4"]
    assert frame["comparisons"].tolist() == list(range(5, 16))
    assert frame.loc[frame["comparisons"] == 5, "1, 4"].item() == 0
    assert frame["1"].sum() == frame["1, 4"].sum() == 720


def test_full_space_bound():
    with pytest.raises(CapacityError):
        distribution(12, GapSequence.of(1))
    with pytest.raises(CapacityError):
        distribution(9, GapSequence.of(1, 4), max_n=8)
    assert distribution(8, GapSequence.of(1, 4), max_n=8).total == 40320


def test_average_history_strictly_improves():
    records = average_history(6)
    assert records[0].i == 1
    means = [r.mean for r in records]
    assert all(a > b for a, b in zip(means, means[1:]))
    best, mean = search_min_average(6)
    assert (best, mean) == (records[-1].sequence, records[-1].mean)
    assert mean <= Fraction(319, 30)


def test_single_element_average():
    best, mean = search_min_average(1)
    assert best.is_empty
    assert mean == 0
