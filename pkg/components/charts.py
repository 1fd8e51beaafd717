"""
Chart components using Plotly.
All charts use the dark theme; orange is the optimal/Shellsort series, blue the comparison series.
"""
import plotly.graph_objects as go

from engine.closed_forms import n1_closed

ORANGE = '#FF6B35'
BLUE = '#4A90E2'
PALETTE = [ORANGE, BLUE, '#50C878', '#FFD700', '#FF69B4', '#20B2AA']


def _dark_layout(fig, height=400, **extra):
    fig.update_layout(
        height=height,
        template='plotly_dark',
        plot_bgcolor='rgba(0,0,0,0)',
        paper_bgcolor='rgba(0,0,0,0)',
        **extra
    )
    fig.update_xaxes(gridcolor='rgba(255,255,255,0.1)')
    fig.update_yaxes(gridcolor='rgba(255,255,255,0.1)')
    return fig


def _empty_figure(message):
    fig = go.Figure()
    fig.add_annotation(
        text=message,
        xref="paper", yref="paper",
        x=0.5, y=0.5,
        showarrow=False,
        font=dict(size=16, color="gray")
    )
    return _dark_layout(fig, height=300)


def create_distribution_chart(hist):
    """Bar chart of how many permutations need each comparison count."""
    frame = hist.to_frame()
    fig = go.Figure(go.Bar(
        x=frame['comparisons'],
        y=frame['frequency'],
        marker_color=ORANGE,
        hovertemplate='<b>%{x} comparisons</b><br>Permutations: %{y:,}<extra></extra>'
    ))
    return _dark_layout(
        fig,
        title=f"n={hist.n}, s={{{hist.sequence}}}",
        xaxis_title="Number of comparisons",
        yaxis_title="Frequency",
        bargap=0.1,
    )


def create_distribution_comparison_chart(comparison):
    """Grouped bars for the frame returned by compare_distributions."""
    fig = go.Figure()
    for i, column in enumerate(comparison.columns[1:]):
        fig.add_trace(go.Bar(
            x=comparison['comparisons'],
            y=comparison[column],
            name=f"{{{column}}}",
            marker_color=PALETTE[i % len(PALETTE)],
        ))
    return _dark_layout(
        fig,
        barmode='group',
        xaxis_title="Number of comparisons",
        yaxis_title="Frequency",
        hovermode='x unified',
    )


def create_optimal_worst_case_chart(points):
    """c_n against n on a log scale; ``points`` are (n, c_n) pairs."""
    if not points:
        return _empty_figure("No search results available yet")
    ns = [n for n, _ in points]
    fig = go.Figure(go.Scatter(
        x=ns,
        y=[max(c, 0.5) for _, c in points],
        customdata=[c for _, c in points],
        mode='lines+markers',
        name='c_n',
        line=dict(color=ORANGE, width=3),
        marker=dict(size=8),
        hovertemplate='<b>n=%{x}</b><br>c_n: %{customdata}<extra></extra>'
    ))
    return _dark_layout(
        fig,
        xaxis_title="n",
        yaxis_title="Worst-case comparisons",
        yaxis=dict(type='log'),
        xaxis=dict(dtick=1),
    )


def create_shell_vs_linear_chart(points):
    """Optimal Shellsort against straight insertion, n(n-1)/2."""
    if not points:
        return _empty_figure("No search results available yet")
    ns = [n for n, _ in points]
    fig = go.Figure()
    fig.add_trace(go.Scatter(
        x=ns, y=[n1_closed(n) for n in ns],
        mode='lines+markers', name='Linear insertion',
        line=dict(color=BLUE, width=2, dash='dash'),
    ))
    fig.add_trace(go.Scatter(
        x=ns, y=[c for _, c in points],
        mode='lines+markers', name='Optimal Shellsort',
        line=dict(color=ORANGE, width=3),
    ))
    return _dark_layout(
        fig,
        xaxis_title="n",
        yaxis_title="Worst-case comparisons",
        hovermode='x unified',
        legend=dict(x=0.01, y=0.99, bgcolor='rgba(0,0,0,0.5)'),
    )


def create_formula_chart(frame):
    """
    One line per closed form in a formulas_table frame; brute-force
    columns, when present, are drawn as markers on top.
    """
    fig = go.Figure()
    formula_columns = [c for c in frame.columns if c.startswith('n_')]
    for i, column in enumerate(formula_columns):
        values = frame[column].where(frame[column] != "—")
        fig.add_trace(go.Scatter(
            x=frame['n'], y=values,
            mode='lines', name=column,
            line=dict(color=PALETTE[i % len(PALETTE)], width=2),
        ))
        brute = f"max s_{column[2:]}"
        if brute in frame.columns:
            fig.add_trace(go.Scatter(
                x=frame['n'], y=frame[brute].where(frame[brute] != "—"),
                mode='markers', name=f"{brute} (enumerated)",
                marker=dict(size=9, symbol='circle-open', color=PALETTE[i % len(PALETTE)]),
            ))
    return _dark_layout(
        fig,
        xaxis_title="n",
        yaxis_title="Worst-case comparisons",
        hovermode='x unified',
    )


def create_search_history_chart(history):
    """Step plot of the best worst case as the search walks the indices."""
    records = history.exact_records
    if not records:
        return _empty_figure("Nothing to plot for n=1")
    fig = go.Figure(go.Scatter(
        x=[r.i for r in records],
        y=[r.worst_case for r in records],
        text=[f"{{{r.sequence}}}" for r in records],
        mode='lines+markers',
        line=dict(color=ORANGE, width=3, shape='hv'),
        marker=dict(size=8),
        hovertemplate='<b>i=%{x}</b><br>s_i=%{text}<br>n_i=%{y}<extra></extra>'
    ))
    return _dark_layout(
        fig,
        xaxis_title="Sequence index i",
        yaxis_title="Worst case n_i",
        xaxis=dict(type='log'),
    )
