"""
Tables page - optimal sequences, reduced-space counts, shell vs linear, closed forms.
"""
import streamlit as st

from components.charts import create_optimal_worst_case_chart, create_shell_vs_linear_chart
from utils.data_loader import (
    load_counts_table,
    load_formulas_table,
    load_optimal_table,
    load_shell_vs_linear,
)


def _notes(notes):
    for note in notes:
        st.caption(f"* {note}")


def render_tables_page():
    """Render the results tables, each in its own sub-tab."""
    st.header("Results Tables")

    compute_up_to = st.slider("Search n up to (when not stored)", min_value=1, max_value=12, value=9,
                              help="Larger n are read from the result store only")

    tab1, tab2, tab3, tab4 = st.tabs(["Optimal", "Counts", "Shell vs Linear", "Formulas"])

    with tab1:
        frame, notes = load_optimal_table(16, compute_up_to)
        st.dataframe(frame, hide_index=True, use_container_width=True)
        _notes(notes)

    with tab2:
        n = st.number_input("n", min_value=2, max_value=30, value=16, step=1, key="counts_n")
        result = load_counts_table(int(n))
        if result is not None:
            frame, notes = result
            st.dataframe(frame, hide_index=True, use_container_width=True)
            _notes(notes)

    with tab3:
        (frame, notes), points = load_shell_vs_linear(16, compute_up_to)
        st.dataframe(frame, use_container_width=True)
        _notes(notes)
        col1, col2 = st.columns([1, 1])
        with col1:
            st.plotly_chart(create_optimal_worst_case_chart(points), use_container_width=True)
        with col2:
            st.plotly_chart(create_shell_vs_linear_chart(points), use_container_width=True)

    with tab4:
        frame = load_formulas_table(3, 30)
        st.dataframe(frame, hide_index=True, use_container_width=True)
