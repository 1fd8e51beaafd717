"""
Full-space brute-force statistics: exact comparison-count histograms,
exact means, and the search for the sequence with the least average.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np
import pandas as pd
from tqdm import tqdm

from engine.gapseq import EMPTY_SEQUENCE, GapSequence, sequences_for_n
from engine.shell import full_space_costs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Histogram:
    n: int
    sequence: GapSequence
    bins: dict

    @property
    def total(self) -> int:
        return sum(self.bins.values())

    @property
    def min_count(self) -> int:
        return min(self.bins)

    @property
    def max_count(self) -> int:
        return max(self.bins)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"comparisons": list(self.bins), "frequency": list(self.bins.values())}
        ).sort_values("comparisons", ignore_index=True)

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "sequence": list(self.sequence.ascending()),
                "bins": {str(k): v for k, v in sorted(self.bins.items())},
                "total": self.total,
                "mean": str(mean_of(self)),
            },
            indent=2,
            sort_keys=True,
        )


def distribution(n: int, s: GapSequence, max_n: int | None = None) -> Histogram:
    costs = full_space_costs(n, s, max_n=max_n)
    counts = np.bincount(costs)
    bins = {int(k): int(v) for k, v in enumerate(counts) if v}
    hist = Histogram(n, s, bins)
    if hist.total != factorial(n):
        raise ArithmeticError(f"histogram mass {hist.total} != {n}!")
    return hist


def mean_of(hist: Histogram) -> Fraction:
    return Fraction(sum(k * f for k, f in hist.bins.items()), hist.total)


def mean_comparisons(n: int, s: GapSequence, max_n: int | None = None) -> Fraction:
    return mean_of(distribution(n, s, max_n=max_n))


@dataclass(frozen=True)
class AverageRecord:
    i: int
    sequence: GapSequence
    mean: Fraction


def average_history(n: int, max_n: int | None = None, progress: bool = False) -> list[AverageRecord]:
    """Strict improvements of the exact mean over indices 1 .. 2^(n-2)."""
    records = []
    best = None
    sequences = list(sequences_for_n(n))
    for s in tqdm(sequences, desc=f"avg n={n}", disable=not progress, leave=False):
        mean = mean_comparisons(n, s, max_n=max_n)
        if best is None or mean < best:
            best = mean
            records.append(AverageRecord(s.index, s, mean))
            logger.info("n=%d: i=%d s={%s} mean=%s", n, s.index, s, mean)
    return records


def search_min_average(n: int, max_n: int | None = None, progress: bool = False) -> tuple[GapSequence, Fraction]:
    """
    Minimal-index sequence with the least exact mean. Ties go to the
    smaller index, as for the worst-case optimum.
    """
    if n == 1:
        return EMPTY_SEQUENCE, Fraction(0)
    last = average_history(n, max_n=max_n, progress=progress)[-1]
    return last.sequence, last.mean


def compare_distributions(first: Histogram, second: Histogram) -> pd.DataFrame:
    """Both histograms over the union of their counts, zeros filled in."""
    counts = sorted(set(first.bins) | set(second.bins))
    return pd.DataFrame(
        {
            "comparisons": counts,
            str(first.sequence): [first.bins.get(c, 0) for c in counts],
            str(second.sequence): [second.bins.get(c, 0) for c in counts],
        }
    )


def histogram_frame(hist: Histogram) -> pd.DataFrame:
    return hist.to_frame()
