"""
Formulas page - closed forms against enumeration, inequality chains, the gamma sequence.
"""
import pandas as pd
import streamlit as st

from components.charts import create_formula_chart
from engine.closed_forms import threshold_report
from engine.verify import SUITES
from utils.data_loader import (
    load_chain_report,
    load_formulas_table,
    load_gamma_sequence,
    load_verification,
)


def render_formulas_page():
    """Render closed-form checks, chain verdicts and verification suites."""
    st.header("Closed Forms")

    col1, col2, col3 = st.columns([2, 2, 1])
    with col1:
        start = st.number_input("From n", min_value=3, max_value=200, value=3, step=1)
    with col2:
        stop = st.number_input("To n", min_value=3, max_value=200, value=16, step=1)
    with col3:
        brute = st.checkbox("Enumerate", value=False, help="Add reduced-space maxima (slow above n=14)")

    if stop < start:
        st.warning("The range is empty.")
    else:
        frame = load_formulas_table(int(start), int(stop), brute_force=brute)
        st.plotly_chart(create_formula_chart(frame), use_container_width=True)
        st.dataframe(frame, hide_index=True, use_container_width=True)

    st.markdown("---")
    st.markdown("### 📐 Threshold Claims")
    rows = [
        {
            "claim": claim.name,
            "from n": claim.holds_from,
            "holds from there": claim.passed,
            "already true at": ", ".join(map(str, claim.early)) or "—",
        }
        for claim in threshold_report(2000)
    ]
    st.dataframe(pd.DataFrame(rows), hide_index=True, use_container_width=True)

    st.markdown("### ⛓ Inequality Chain")
    chain_report = load_chain_report(9, 13, (7, 4, 3, 2, 1), 9)
    st.code(chain_report.render())
    if chain_report.passed:
        st.success("Chain holds on every n checked.")
    else:
        st.error("Chain fails for at least one n.")

    st.markdown("### γ Increments")
    limit = st.number_input("Below", min_value=2, value=1_000_000, step=1000)
    st.write(", ".join(str(h) for h in load_gamma_sequence(int(limit))))

    with st.expander("✅ Verification suites"):
        suite = st.selectbox("Suite", options=[s for s in SUITES if s not in ("reduction", "history")])
        if st.button("Run", use_container_width=True):
            report = load_verification(suite)
            st.code(report.render())
            if report.passed:
                st.success(report.summary())
            else:
                st.error(report.summary())
