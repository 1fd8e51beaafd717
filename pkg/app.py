"""
Shellsort Gap Lab - Streamlit entry point.
"""
import streamlit as st

from engine import ENGINE_VERSION
from pages.distribution_page import render_distribution_page
from pages.formulas_page import render_formulas_page
from pages.search_page import render_search_page
from pages.tables_page import render_tables_page

# Page configuration
st.set_page_config(
    page_title="Shellsort Gap Lab",
    page_icon="🧮",
    layout="wide"
)

st.title("🧮 Shellsort Gap Lab")

tab1, tab2, tab3, tab4 = st.tabs([
    "🔍 Search",
    "📋 Tables",
    "📊 Distributions",
    "📐 Formulas"
])

with tab1:
    render_search_page()

with tab2:
    render_tables_page()

with tab3:
    render_distribution_page()

with tab4:
    render_formulas_page()

# Footer
st.markdown("---")
st.markdown(f"*Results are cached in the result store (engine {ENGINE_VERSION}); the CLI and the dashboard share it.*")
