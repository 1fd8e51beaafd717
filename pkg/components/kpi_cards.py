"""
Metric card components for search results and distributions.
"""
import streamlit as st

from engine.closed_forms import n1_closed
from engine.oracle import mean_of


def display_search_metrics(history):
    """Main search metrics in a 4-column layout."""
    col1, col2, col3, col4 = st.columns(4)

    linear = n1_closed(history.n)
    with col1:
        st.metric(
            f"c_{history.n}",
            "—" if history.final_c is None else f"{history.final_c}",
            None if history.final_c is None else f"{history.final_c - linear} vs linear",
            delta_color="inverse"
        )

    with col2:
        st.metric("Optimal sequence", f"{{{history.final_sequence}}}")

    with col3:
        st.metric("Index", "—" if history.final_index is None else f"{history.final_index:,}")

    with col4:
        st.metric(
            "Improvements",
            f"{len(history.exact_records)}",
            "complete" if history.complete else "truncated",
            delta_color="off"
        )


def display_distribution_stats(hist):
    """Distribution summary in info cards."""
    col1, col2, col3 = st.columns(3)
    mean = mean_of(hist)

    with col1:
        st.info(f"""
        **Mean comparisons**
        {float(mean):.4f} (= {mean})
        """)

    with col2:
        st.info(f"""
        **Range**
        {hist.min_count} – {hist.max_count}
        """)

    with col3:
        st.info(f"""
        **Permutations**
        {hist.total:,}
        """)
