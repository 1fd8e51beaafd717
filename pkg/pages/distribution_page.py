"""
Distribution page - exact comparison-count histograms over all n! permutations.
"""
import pandas as pd
import streamlit as st

from components.charts import create_distribution_chart, create_distribution_comparison_chart
from components.kpi_cards import display_distribution_stats
from engine.errors import ShellGapError
from engine.gapseq import GapSequence, require_valid
from engine.oracle import compare_distributions
from utils.config import get_settings
from utils.data_loader import load_average_history, load_distribution


def _sequence_input(label, default, n, key):
    text = st.text_input(label, value=default, key=key, help="Comma-separated increments, e.g. 1,4")
    try:
        s = GapSequence.parse(text)
        require_valid(s, n)
        return s
    except ShellGapError as e:
        st.error(f"{e}")
        return None


def render_distribution_page():
    """Render histograms, a side-by-side comparison and the least-average search."""
    st.header("Comparison-Count Distributions")
    max_n = get_settings().brute_force_max_n

    n = int(st.number_input("n", min_value=2, max_value=max_n, value=6, step=1, key="dist_n",
                            help=f"Every permutation of 1..n is sorted; n is capped at {max_n}"))

    col1, col2 = st.columns([1, 1])
    with col1:
        first = _sequence_input("First sequence", "1", n, "dist_first")
    with col2:
        second = _sequence_input("Second sequence", "1,4" if n > 4 else "1,2", n, "dist_second")

    if first is None or second is None:
        return

    hist_a = load_distribution(n, first.ascending())
    hist_b = load_distribution(n, second.ascending())
    if hist_a is None or hist_b is None:
        return

    st.markdown("---")
    col1, col2 = st.columns([1, 1])
    with col1:
        display_distribution_stats(hist_a)
        st.plotly_chart(create_distribution_chart(hist_a), use_container_width=True)
    with col2:
        display_distribution_stats(hist_b)
        st.plotly_chart(create_distribution_chart(hist_b), use_container_width=True)

    st.markdown("### 🔄 Side by Side")
    comparison = compare_distributions(hist_a, hist_b)
    st.plotly_chart(create_distribution_comparison_chart(comparison), use_container_width=True)
    st.download_button("Download CSV", comparison.to_csv(index=False),
                       file_name=f"distribution-n{n}.csv", mime="text/csv")

    with st.expander("📉 Least average over all sequences"):
        records = load_average_history(n)
        if records:
            st.dataframe(
                pd.DataFrame(
                    [{"i": r.i, "s_i": f"{{{r.sequence}}}", "mean": float(r.mean), "exact": str(r.mean)}
                     for r in records]
                ),
                hide_index=True,
                use_container_width=True,
            )
