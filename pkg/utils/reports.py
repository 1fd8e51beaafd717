"""
Table builders for the reproduced tables, as pandas DataFrames, plus a
plain-text renderer shared by the CLI. Cells that disagree with the
published value get a "*" and a footnote; missing cells are "—".
"""
import logging

import pandas as pd

from engine.bad_space import bad1_count, evaluate_reduced, reduced_space
from engine.closed_forms import n1_closed, n2_closed, n3_closed, n4_closed
from engine.gapseq import sequence_from_index
from engine.minimax import SearchOptions, history_from_dict, history_to_dict, minimax_search
from engine.published import (
    PUBLISHED_COUNTS_16,
    PUBLISHED_LINEAR,
    PUBLISHED_OPTIMAL,
    PUBLISHED_SHELLSORT,
)
from utils.config import get_settings
from utils.result_store import result_key

logger = logging.getLogger(__name__)

MISSING = "—"


def collect_histories(max_n, store=None, compute_up_to=10, force=False, jobs=1):
    """
    Search histories for n = 1..max_n: from the store when present,
    computed (and stored) for n <= compute_up_to, otherwise None.
    """
    histories = {}
    for n in range(1, max_n + 1):
        key = result_key("search", n)
        stored = None if (store is None or force) else store.get(key)
        if stored is not None:
            history = history_from_dict(stored)
            histories[n] = history if history.complete else None
            if history.complete:
                continue
        if n <= compute_up_to:
            history = minimax_search(n, SearchOptions(jobs=jobs))
            if store is not None:
                store.put(key, history_to_dict(history))
            histories[n] = history
        else:
            histories.setdefault(n, None)
    return histories


def optimal_table(histories):
    rows, notes = [], []
    for n, history in sorted(histories.items()):
        published = PUBLISHED_OPTIMAL.get(n)
        if history is None:
            rows.append({"n": n, "s**_n": MISSING, "i(s**_n)": MISSING, "c_n": MISSING})
            continue
        seq, index, c = str(history.final_sequence), history.final_index, history.final_c
        row = {"n": n, "s**_n": seq, "i(s**_n)": "" if index is None else str(index), "c_n": str(c)}
        if published:
            pub_seq, pub_index, pub_c = published
            if history.final_sequence.ascending() != pub_seq:
                row["s**_n"] += "*"
                notes.append(f"n={n}: published sequence {{{', '.join(map(str, pub_seq))}}}")
            if index != pub_index:
                row["i(s**_n)"] += "*"
                notes.append(
                    f"n={n}: published index {pub_index}; "
                    f"{{{seq}}} has index {index} by the index formula"
                )
            if c != pub_c:
                row["c_n"] += "*"
                notes.append(f"n={n}: published c_n {pub_c}")
        rows.append(row)
    return pd.DataFrame(rows, columns=["n", "s**_n", "i(s**_n)", "c_n"]), notes


def counts_table(n=16):
    rows, notes = [], []
    for h in range(1, max(n - 1, 1) + 1):
        count = bad1_count(n, h)
        cell = f"{count:,}".replace(",", " ")
        if n == 16 and PUBLISHED_COUNTS_16.get(h) != count:
            cell += "*"
            notes.append(f"s(1)={h}: published {PUBLISHED_COUNTS_16.get(h)}")
        rows.append({"s(1)": h, "|P_n,(s,1)|": cell})
    return pd.DataFrame(rows), notes


def shell_vs_linear_table(histories):
    ns = sorted(histories)
    linear, shell, improvement, notes = {}, {}, {}, []
    for n in ns:
        lin = n1_closed(n)
        linear[n] = str(lin)
        history = histories[n]
        if history is None:
            shell[n] = improvement[n] = MISSING
            continue
        shell[n] = str(history.final_c)
        improvement[n] = str(lin - history.final_c)
        if n <= len(PUBLISHED_SHELLSORT) and PUBLISHED_SHELLSORT[n - 1] != history.final_c:
            shell[n] += "*"
            notes.append(f"n={n}: published shellsort value {PUBLISHED_SHELLSORT[n - 1]}")
        if n <= len(PUBLISHED_LINEAR) and PUBLISHED_LINEAR[n - 1] != lin:
            linear[n] += "*"
            notes.append(f"n={n}: published linear value {PUBLISHED_LINEAR[n - 1]}")
    frame = pd.DataFrame([linear, shell, improvement], index=["Linear", "Shellsort", "Improvement"])
    frame.columns = [str(n) for n in ns]
    return frame, notes


def formulas_table(n_values, brute_force=False, budget=None):
    """Closed forms per n, optionally beside the reduced-space maxima."""
    rows = []
    for n in n_values:
        row = {"n": n, "n_1": n1_closed(n)}
        for i, formula, start in ((2, n2_closed, 3), (3, n3_closed, 4), (4, n4_closed, 4)):
            row[f"n_{i}"] = formula(n) if n >= start else MISSING
            if brute_force:
                if n < start:
                    row[f"max s_{i}"] = MISSING
                    continue
                row[f"max s_{i}"] = _reduced_or_missing(i, n, budget)
        rows.append(row)
    return pd.DataFrame(rows)


def _reduced_or_missing(i, n, budget):
    s = sequence_from_index(i)
    budget = get_settings().enum_budget if budget is None else budget
    if reduced_space(n, s.largest).cardinality > budget:
        return MISSING
    return evaluate_reduced(n, s).worst


def render_frame(frame, notes=(), title=None, index=False):
    lines = []
    if title:
        lines.append(title)
    lines.append(frame.to_string(index=index))
    for note in notes:
        lines.append(f"  * {note}")
    return "\n".join(lines)
