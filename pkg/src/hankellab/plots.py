"""Figure rendering for CLI reports.

Uses the Agg backend unconditionally; every function writes a file and
returns the path, nothing is shown interactively.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import EventuallyPeriodic


def sequence_figure(
    values: list[int],
    title: str,
    path: str,
    witness: EventuallyPeriodic | None = None,
) -> str:
    """Step plot of a determinant sequence, cycle boundaries marked."""
    fig, ax = plt.subplots(figsize=(9, 3.5))
    xs = range(1, len(values) + 1)
    ax.step(xs, values, where="mid", lw=1.2)
    ax.axhline(0, color="gray", lw=0.6)
    if witness is not None:
        r, p = len(witness.preperiod), len(witness.period)
        for edge in range(r, len(values) + 1, p):
            ax.axvline(edge + 0.5, color="tab:orange", lw=0.5, alpha=0.6)
    ax.set_xlabel("n")
    ax.set_ylabel("determinant")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def coeffs_figure(values: list[int], title: str, path: str) -> str:
    """Log-scale magnitude plot of series coefficients (zeros dropped)."""
    fig, ax = plt.subplots(figsize=(9, 3.5))
    pts = [(i, abs(v)) for i, v in enumerate(values) if v != 0]
    if pts:
        ax.semilogy([i for i, _ in pts], [v for _, v in pts], ".-", lw=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel("|coefficient|")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def catalog_figure(labels: list[str], periods: list[int | None], path: str) -> str:
    """Period-per-row bar chart; rows without a period marked at zero."""
    fig, ax = plt.subplots(figsize=(11, 4.5))
    xs = range(len(labels))
    heights = [p if p is not None else 0 for p in periods]
    colors = ["tab:blue" if p is not None else "tab:red" for p in periods]
    ax.bar(xs, heights, color=colors)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=5)
    ax.set_ylabel("period (red: none found)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
