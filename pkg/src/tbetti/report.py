"""Figures for CLI reports, written to files with the Agg backend."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLORS = {
    "proved-equal": "#2b8a3e",
    "conjecture-equal": "#74c0fc",
    "conjecture-unequal": "#f08c00",
    "proved-unequal": "#c92a2a",
}


def _save(fig, path: str | Path) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated runs byte-identical for PNG/SVG/PDF
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata=_metadata(path))
    plt.close(fig)
    return str(path)


def _metadata(path: Path) -> dict:
    suffix = path.suffix.lower()
    if suffix == ".svg":
        return {"Date": None}
    if suffix == ".pdf":
        return {"CreationDate": None}
    if suffix == ".png":
        return {"Software": None}
    return {}


def plot_betti(series: dict[str, Sequence[int]], path: str | Path, title: str = "") -> str:
    """Betti numbers against q, one line per method or family."""
    fig, ax = plt.subplots(figsize=(6, 4))
    markers = "osd^v<>"
    for k, (label, values) in enumerate(series.items()):
        ax.plot(range(len(values)), values, marker=markers[k % len(markers)],
                linestyle="-" if k == 0 else "--", label=label)
    ax.set_xlabel("homological degree q")
    ax.set_ylabel(r"$\beta_q$")
    ax.set_yscale("symlog", linthresh=1)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    ax.grid(alpha=0.3)
    return _save(fig, path)


def plot_scan(rows: Sequence[dict], path: str | Path) -> str:
    """Grid over (n, t) colored by comparison status."""
    n_max = max(r["n"] for r in rows)
    fig, ax = plt.subplots(figsize=(1 + 0.6 * n_max, 1 + 0.6 * n_max))
    seen = set()
    for r in rows:
        status = r["status"]
        label = status if status not in seen else None
        seen.add(status)
        ax.scatter(r["n"], r["t"], s=220, marker="s", color=STATUS_COLORS[status],
                   label=label, edgecolors="k", linewidths=0.5)
    ax.set_xlabel("n")
    ax.set_ylabel("t")
    ax.set_xticks(range(1, n_max + 1))
    ax.set_yticks(range(1, n_max + 1))
    ax.set_aspect("equal")
    ax.legend(frameon=False, loc="upper left", fontsize="small")
    ax.set_title("Betti comparison, b = 2")
    return _save(fig, path)


def plot_compare(rows: Sequence[dict], path: str | Path) -> str:
    """Side-by-side Betti sequences for each compared (n, t)."""
    k = len(rows)
    cols = min(k, 3)
    nrows = -(-k // cols)
    fig, axes = plt.subplots(nrows, cols, figsize=(4 * cols, 3 * nrows), squeeze=False)
    for ax, r in zip(axes.flat, rows):
        q = range(len(r["betti_jt"]))
        ax.plot(q, r["betti_transversal"], "o-", label="transversal")
        ax.plot(q, r["betti_jt"], "x--", label="initial ideal")
        ax.set_title(f"n={r['n']}, t={r['t']}")
        ax.set_xlabel("q")
    for ax in list(axes.flat)[k:]:
        ax.axis("off")
    axes.flat[0].legend(frameon=False, fontsize="small")
    fig.tight_layout()
    return _save(fig, path)
