"""Figures for verification reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .harness import VerificationReport  # noqa: E402


def plot_report(report: VerificationReport, path: str | Path) -> Path:
    """Stacked bars of hits, misses and undecided graphs per order."""
    orders = sorted(report.per_order)
    hits = [report.per_order[n].hits for n in orders]
    misses = [report.per_order[n].misses for n in orders]
    unknown = [report.per_order[n].unknown for n in orders]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(orders, hits, label="contains a listed family", color="tab:green")
    ax.bar(orders, misses, bottom=hits, label="miss", color="tab:red")
    ax.bar(orders, unknown, bottom=[h + m for h, m in zip(hits, misses)], label="budget exhausted", color="tab:gray")
    ax.set_yscale("symlog")
    ax.set_xlabel("order")
    ax.set_ylabel("graphs")
    thr = report.threshold()
    status = f"threshold {thr}" if isinstance(thr, int) else "threshold not reached"
    ax.set_title(f"c={report.c}, k={report.k}: {status}")
    ax.set_xticks(orders)
    ax.legend(fontsize="small")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
