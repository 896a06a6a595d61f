"""Histogram figures for experiment reports (headless matplotlib)."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def histogram_figure(counts: Mapping[str, int], path: Path, xlabel: str = "value",
                     title: str = "") -> Path:
    """Bar chart of integer-keyed counts written to ``path`` (format from the suffix)."""
    keys = sorted(counts, key=int)
    xs = [int(k) for k in keys]
    ys = [counts[k] for k in keys]
    fig, ax = plt.subplots(figsize=(5, 3.2), dpi=120)
    ax.bar(xs, ys, width=0.8, color="#4a6fa5", edgecolor="black", linewidth=0.5)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("trials")
    if xs:
        ax.set_xticks(xs)
    if title:
        ax.set_title(title, fontsize=9)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)
