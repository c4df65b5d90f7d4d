"""Matplotlib figures for bench reports (headless, written straight to files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402

STYLE = {
    "classic": {"color": "#4c72b0", "marker": "o", "label": "Original Apriori"},
    "improved": {"color": "#dd8452", "marker": "s", "label": "Improved Apriori"},
    "fpgrowth": {"color": "#55a868", "marker": "^", "label": "FP-growth"},
}


def _series(rows, key, metric):
    out: dict[str, tuple[list, list]] = {}
    for r in rows:
        xs, ys = out.setdefault(r.algorithm, ([], []))
        xs.append(key(r))
        ys.append(getattr(r, metric))
    return out


def _two_panel(rows: list[BenchRow], key, xlabel: str, title: str, path, categorical: bool) -> None:
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, metric, ylabel in (
        (axes[0], "records_read", "transaction records read"),
        (axes[1], "elapsed_ms", "elapsed (ms)"),
    ):
        for algo, (xs, ys) in _series(rows, key, metric).items():
            style = STYLE.get(algo, {"label": algo})
            ax.plot(range(len(xs)) if categorical else xs, ys, **style)
            if categorical:
                ax.set_xticks(range(len(xs)), xs)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.grid(alpha=0.3)
    axes[0].legend(frameon=False)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_groups(rows: list[BenchRow], path) -> None:
    """Cost per transaction group (one point per dataset label)."""
    _two_panel(rows, lambda r: r.dataset, "transaction group", "Cost by number of transactions", path, True)


def plot_min_sup(rows: list[BenchRow], path) -> None:
    """Cost across the minimum-support sweep."""
    _two_panel(rows, lambda r: r.min_sup, "minimum support", "Cost by minimum support", path, False)
