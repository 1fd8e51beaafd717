"""Cached data loaders for the dashboard pages."""
import streamlit as st

from engine.closed_forms import gamma_sequence, verify_chain
from engine.errors import ShellGapError
from engine.gapseq import GapSequence
from engine.minimax import SearchOptions, history_from_dict, history_to_dict, minimax_search
from engine.oracle import average_history, distribution
from engine.verify import run_suite
from utils.reports import (
    collect_histories,
    counts_table,
    formulas_table,
    optimal_table,
    shell_vs_linear_table,
)
from utils.result_store import ResultStore, result_key


@st.cache_resource
def get_result_store():
    """Result store shared by every page."""
    return ResultStore()


@st.cache_data(show_spinner="Searching gap sequences...")
def load_search_history(n, jobs=1, index_limit=None, budget=None):
    """Search history for n, from the store when a complete run is stored."""
    store = get_result_store()
    key = result_key("search", n)
    try:
        if index_limit is None and budget is None:
            stored = store.get(key)
            if stored is not None and stored["complete"]:
                return history_from_dict(stored)
        history = minimax_search(n, SearchOptions(index_limit=index_limit, budget=budget, jobs=jobs))
        if history.complete:
            store.put(key, history_to_dict(history))
        return history
    except ShellGapError as e:
        st.error(f"Search failed: {e}")
        return None


@st.cache_data
def load_optimal_table(max_n, compute_up_to):
    histories = collect_histories(max_n, get_result_store(), compute_up_to=compute_up_to)
    return optimal_table(histories)


@st.cache_data
def load_shell_vs_linear(max_n, compute_up_to):
    histories = collect_histories(max_n, get_result_store(), compute_up_to=compute_up_to)
    return shell_vs_linear_table(histories), histories_frame_data(histories)


def histories_frame_data(histories):
    """(n, c_n) pairs for the computed histories."""
    return [(n, h.final_c) for n, h in sorted(histories.items()) if h is not None]


@st.cache_data
def load_counts_table(n):
    try:
        return counts_table(n)
    except ShellGapError as e:
        st.error(f"Cannot count reduced spaces: {e}")
        return None


@st.cache_data(show_spinner="Evaluating closed forms...")
def load_formulas_table(start, stop, brute_force=False):
    return formulas_table(range(start, stop + 1), brute_force=brute_force)


@st.cache_data
def load_distribution(n, increments):
    """Histogram for (n, s); increments is a tuple so the cache can hash it."""
    try:
        return distribution(n, GapSequence(tuple(increments)))
    except ShellGapError as e:
        st.error(f"Cannot build distribution: {e}")
        return None


@st.cache_data(show_spinner="Searching for the least average...")
def load_average_history(n):
    try:
        return average_history(n)
    except ShellGapError as e:
        st.error(f"Average search failed: {e}")
        return None


@st.cache_data(show_spinner="Checking inequality chain...")
def load_chain_report(start, stop, chain, domain_start):
    return verify_chain(range(start, stop + 1), tuple(chain), domain_start=domain_start)


@st.cache_data
def load_gamma_sequence(limit):
    return gamma_sequence(limit)


@st.cache_data(show_spinner="Running verification suite...")
def load_verification(suite):
    return run_suite(suite)
