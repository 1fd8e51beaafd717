"""
Closed-form worst cases for the first few sequences, the divisibility
indicator chi_k, the gamma-sequence, and strict inequality chains
between worst cases.

Every formula is evaluated in exact rational arithmetic and must come
out integral.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from engine.bad_space import reduced_space, evaluate_reduced
from engine.errors import DomainError
from engine.gapseq import GapSequence, sequence_from_index
from utils.config import get_settings

logger = logging.getLogger(__name__)

GAMMA = Fraction("2.243609061420001")
GAMMA_CERTIFIED_K = 17


def chi(k: int, n: int) -> int:
    if k < 1:
        raise DomainError(f"chi_k needs k >= 1, got {k}")
    return 1 if n % k == 0 else 0


def _ceil_div(a, b):
    return -(-a // b)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def _require_n(n, start, name):
    if n < start:
        raise DomainError(f"{name} is defined for n >= {start}, got {n}")


def n1_closed(n: int) -> int:
    """Linear insertion sort: n(n-1)/2."""
    _require_n(n, 1, "n_1")
    return n * (n - 1) // 2


def n2_closed(n: int) -> int:
    _require_n(n, 3, "n_2")
    c2 = chi(2, n)
    value = (
        Fraction(-7, 8) + Fraction(n, 2) + Fraction(3 * n * n, 8)
        - Fraction(9, 8) * c2 + Fraction(n, 4) * c2
    )
    return _integral(value, f"n_2({n})")


def n2_expanded(n: int) -> int:
    """Ceiling form of n_2; the constant term is -2 (a +2 does not match the search logs)."""
    _require_n(n, 3, "n_2")
    half = _ceil_div(n, 2)
    value = Fraction(n * (n - 1), 2) - Fraction(half * half, 2) + Fraction(5 * half, 2) - 2
    return _integral(value, f"n_2({n})")


def n3_closed(n: int) -> int:
    _require_n(n, 4, "n_3")
    value = (
        -1 + Fraction(2 * n, 3) + Fraction(n * n, 3)
        - (2 - Fraction(n, 3)) * chi(3, n)
        - Fraction(2, 3) * chi(3, n + 1)
    )
    return _integral(value, f"n_3({n})")


def n3_expanded(n: int) -> int:
    _require_n(n, 4, "n_3")
    third = _ceil_div(n, 3)
    third_before = _ceil_div(n - 1, 3)
    value = (
        Fraction(n * (n - 1), 2) - Fraction(3 * third * third, 2) + Fraction(9 * third, 2) - 3
        + Fraction(n - 1, 3) * (third - third_before)
    )
    return _integral(value, f"n_3({n})")


def n4_closed(n: int) -> int:
    _require_n(n, 4, "n_4")
    value = (
        Fraction(-35, 12) + Fraction(5 * n, 3) + Fraction(n * n, 4)
        - (Fraction(25, 12) - Fraction(n, 6)) * chi(6, n)
        - (Fraction(7, 3) - Fraction(n, 3)) * chi(6, n + 1)
        - (Fraction(17, 12) - Fraction(n, 6)) * chi(6, n + 2)
        - (Fraction(10, 3) - Fraction(n, 3)) * chi(6, n + 3)
        - (Fraction(41, 12) - Fraction(n, 2)) * chi(6, n + 4)
    )
    return _integral(value, f"n_4({n})")


@dataclass(frozen=True)
class WorstCaseFormula:
    sequence_index: int
    domain_start: int

    def __call__(self, n: int) -> int:
        return CLOSED_FORMS[self.sequence_index](n)

    @property
    def sequence(self) -> GapSequence:
        return sequence_from_index(self.sequence_index)


CLOSED_FORMS = {1: n1_closed, 2: n2_closed, 3: n3_closed, 4: n4_closed}
FORMULAS = {
    1: WorstCaseFormula(1, 1),
    2: WorstCaseFormula(2, 3),
    3: WorstCaseFormula(3, 4),
    4: WorstCaseFormula(4, 4),
}


def worst_case_formula(i: int) -> WorstCaseFormula:
    try:
        return FORMULAS[i]
    except KeyError:
        raise DomainError(f"no closed form for index {i}") from None


def gamma_increment(k: int) -> int:
    if k < 1:
        raise DomainError(f"gamma increments start at k=1, got {k}")
    if k > GAMMA_CERTIFIED_K:
        logger.warning(
            "gamma increment k=%d is beyond the certified range 1..%d; "
            "precision of the stored constant is unverified there",
            k,
            GAMMA_CERTIFIED_K,
        )
    return ceil((GAMMA**k - 1) / (GAMMA - 1))


def gamma_sequence(limit: int) -> list[int]:
    """All gamma increments below ``limit``, ascending."""
    out = []
    k = 1
    while (h := gamma_increment(k)) < limit:
        out.append(h)
        k += 1
    return out


def worst_case(i: int, n: int, budget: int | None = None, jobs: int = 1) -> int | None:
    """
    n_i(n): the closed form when one exists, otherwise the reduced-space
    maximum. None when the reduced space is over budget.
    """
    if i in FORMULAS and n >= FORMULAS[i].domain_start:
        return FORMULAS[i](n)
    s = sequence_from_index(i)
    if s.largest > n - 1:
        raise DomainError(f"s_{i} = {{{s}}} is not a gap sequence for n={n}")
    budget = get_settings().enum_budget if budget is None else budget
    if reduced_space(n, s.largest).cardinality > budget:
        return None
    return evaluate_reduced(n, s, jobs=jobs).worst


HOLDS = "holds"
FAILS = "fails"
UNVERIFIABLE = "unverifiable"
OUTSIDE = "outside-domain"


@dataclass(frozen=True)
class ChainRow:
    n: int
    values: dict
    verdict: str


@dataclass
class ChainReport:
    chain: tuple[int, ...]
    domain_start: int
    rows: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.verdict in (HOLDS, UNVERIFIABLE, OUTSIDE) for r in self.rows)

    def to_dict(self):
        return {
            "chain": list(self.chain),
            "domain_start": self.domain_start,
            "rows": [
                {"n": r.n, "values": {str(k): v for k, v in r.values.items()}, "verdict": r.verdict}
                for r in self.rows
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render(self):
        header = "n".rjust(4) + "".join(f"n_{i}".rjust(8) for i in self.chain) + "  verdict"
        lines = [" < ".join(f"n_{i}" for i in self.chain), header]
        for r in self.rows:
            cells = "".join(("—" if r.values.get(i) is None else str(r.values[i])).rjust(8) for i in self.chain)
            lines.append(f"{r.n:>4}{cells}  {r.verdict}")
        return "\n".join(lines)


def verify_chain(n_range, chain, domain_start: int = 1, budget: int | None = None, jobs: int = 1) -> ChainReport:
    """
    Check n_{chain[0]}(n) < n_{chain[1]}(n) < ... for every n in ``n_range``.
    Spaces over budget are reported unverifiable, never assumed.
    """
    report = ChainReport(tuple(chain), domain_start)
    for n in n_range:
        if n < domain_start:
            report.rows.append(ChainRow(n, {}, OUTSIDE))
            continue
        values = {i: worst_case(i, n, budget=budget, jobs=jobs) for i in chain}
        known = [values[i] for i in chain]
        if any(v is None for v in known):
            verdict = UNVERIFIABLE
        elif all(a < b for a, b in zip(known, known[1:])):
            verdict = HOLDS
        else:
            verdict = FAILS
        logger.debug("chain %s at n=%d: %s %s", chain, n, known, verdict)
        report.rows.append(ChainRow(n, values, verdict))
    return report


@dataclass(frozen=True)
class ThresholdClaim:
    """
    "predicate iff n >= holds_from" over the formula domain. ``failures``
    are n >= holds_from where the predicate is false; ``early`` are
    n < holds_from where it is already true (the "only if" half).
    """

    name: str
    holds_from: int
    failures: tuple[int, ...]
    early: tuple[int, ...]

    @property
    def passed(self):
        return not self.failures

    @property
    def iff_holds(self):
        return not self.failures and not self.early


def threshold_report(max_n: int = 10_000) -> list[ThresholdClaim]:
    """n_2 < n_1 from n = 9, n_3 < n_1 from n = 7, n_3 < n_2 from n = 9."""
    claims = []
    checks = [
        ("n_2 < n(n-1)/2", 9, 3, lambda n: n2_closed(n) < n1_closed(n)),
        ("n_3 < n(n-1)/2", 7, 4, lambda n: n3_closed(n) < n1_closed(n)),
        ("n_3 < n_2", 9, 4, lambda n: n3_closed(n) < n2_closed(n)),
    ]
    for name, holds_from, start, predicate in checks:
        failures, early = [], []
        for n in range(start, max_n + 1):
            ok = predicate(n)
            if n >= holds_from and not ok:
                failures.append(n)
            elif n < holds_from and ok:
                early.append(n)
        claims.append(ThresholdClaim(name, holds_from, tuple(failures), tuple(early)))
    return claims
