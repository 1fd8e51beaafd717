"""
Search page - run or load the minimax search for one n.
"""
import pandas as pd
import streamlit as st

from components.charts import create_search_history_chart
from components.kpi_cards import display_search_metrics
from engine.minimax import render_history
from engine.published import PUBLISHED_BEST_KNOWN, PUBLISHED_HISTORIES
from utils.data_loader import load_search_history


def _history_frame(history):
    return pd.DataFrame(
        [
            {
                "i": r.i,
                "s_i": f"{{{r.sequence}}}",
                "n_i": f">={r.worst_case}" if r.status == "lower_bound" else r.worst_case,
            }
            for r in history.records
        ]
    )


def render_search_page():
    """Render the search page: metrics, improvement log and chart."""
    st.header("Minimax Search")

    col1, col2, col3 = st.columns([2, 2, 1])
    with col1:
        n = st.number_input("n (number of elements)", min_value=1, max_value=30, value=8, step=1,
                            help="Searches above n=12 take a long time without a budget")
    with col2:
        budget = st.number_input("Ranks per index (0 = unlimited)", min_value=0, value=0, step=100_000,
                                 help="A partially evaluated index ends the search with a lower bound")
    with col3:
        run = st.button("🔍 Search", type="primary", use_container_width=True)

    if not run and n > 10:
        st.info("💡 **Tip:** Press Search to start; stored results load instantly.")
        return

    history = load_search_history(int(n), budget=int(budget) or None)
    if history is None:
        return

    st.markdown("---")
    display_search_metrics(history)

    col1, col2 = st.columns([1, 1])
    with col1:
        st.markdown("#### 📋 Improvement Log")
        st.dataframe(_history_frame(history), hide_index=True, use_container_width=True)
    with col2:
        st.plotly_chart(create_search_history_chart(history), use_container_width=True)

    published = PUBLISHED_HISTORIES.get(int(n), [])
    got = [(r.i, r.worst_case, r.status) for r in history.records]
    if history.complete and published:
        if got == published:
            st.success("Improvement log matches the published search log.")
        else:
            st.warning("Improvement log differs from the published search log.")
    if int(n) in PUBLISHED_BEST_KNOWN:
        increments, index, bound = PUBLISHED_BEST_KNOWN[int(n)]
        st.info(f"**Best known:** {{{', '.join(map(str, increments))}}} (i={index}), c_n <= {bound}")

    with st.expander("📄 Text log"):
        st.code(render_history(history))
