"""Rendering of verification and wrapper reports as figures plus CSV.

The CLI writes these next to the JSON output when asked: a histogram of
the per-run Hamming loss for ``verify``, and a breakdown of the
wrapper's working storage for ``wrap``. Each figure ships with the
delimited data it was drawn from.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = [
    "write_runs_csv",
    "render_loss_figure",
    "write_scratch_csv",
    "render_scratch_figure",
]

_RUN_FIELDS = ("n", "x", "w", "verdict", "final_aux", "loss",
               "steps", "peak_work_cells", "error")


def write_runs_csv(rows: list[dict], path: Path) -> None:
    """Write one row per verification run."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=_RUN_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow({key: row.get(key, "") for key in _RUN_FIELDS})


def render_loss_figure(machine: str, rows: list[dict], path: Path) -> None:
    """Histogram of the Hamming loss per run, grouped by input length.

    Runs that ended in a model violation carry no loss and are skipped.
    """
    by_n: dict[int, dict[int, int]] = {}
    for row in rows:
        if "loss" not in row:
            continue
        counts = by_n.setdefault(row["n"], {})
        counts[row["loss"]] = counts.get(row["loss"], 0) + 1

    fig, ax = plt.subplots(figsize=(6, 4))
    losses = sorted({loss for counts in by_n.values() for loss in counts})
    if losses:
        width = 0.8 / len(by_n)
        for i, (n, counts) in enumerate(sorted(by_n.items())):
            xs = [j + i * width for j in range(len(losses))]
            ys = [counts.get(loss, 0) for loss in losses]
            ax.bar(xs, ys, width=width, label=f"n={n}")
        ax.set_xticks([j + 0.4 - width / 2 for j in range(len(losses))])
        ax.set_xticklabels([str(loss) for loss in losses])
        ax.legend()
    ax.set_xlabel("Hamming distance between initial and final aux")
    ax.set_ylabel("runs")
    ax.set_title(f"{machine}: loss profile over the (x, w) grid")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def write_scratch_csv(components: list[tuple[str, int]], path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["component", "bits"])
        writer.writerows(components)


def render_scratch_figure(machine: str, components: list[tuple[str, int]],
                          budget: int, path: Path) -> None:
    """Bar chart of the wrapper's working storage against its budget."""
    names = [name for name, _ in components]
    bits = [b for _, b in components]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, bits)
    ax.axhline(budget, linestyle="--", color="tab:red",
               label=f"budget = {budget} bits")
    ax.set_ylabel("bits")
    ax.set_title(f"{machine}: wrapper working storage "
                 f"(total {sum(bits)} of {budget} bits)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
