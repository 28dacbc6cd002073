"""Rendered report: CSV check table plus diagnostic figures.

Everything is derived from the same exact-arithmetic data as the text
certificates; the figures only restate it visually (homology ranks,
boundary-matrix sparsity, and the obstruction rows in the 17-dim target).
"""
from __future__ import annotations

import csv
from pathlib import Path
from typing import Any

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from . import homology, obstruction, reports  # noqa: E402
from .reports import CheckReport  # noqa: E402


def _bits(word_vector) -> list[int]:
    return [int(ch) for ch in word_vector.to01()]


def _betti_figure(path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6.4, 3.2))
    x = 0
    ticks: list[int] = []
    labels: list[str] = []
    for arity in (2, 3, 4):
        for dim, rank in enumerate(homology.poincare_polynomial(arity)):
            ax.bar(x, rank, color="#4878a8")
            ax.text(x, rank, str(rank), ha="center", va="bottom", fontsize=8)
            ticks.append(x)
            labels.append(f"{arity},{dim}")
            x += 1
        x += 1
    ax.set_xticks(ticks)
    ax.set_xticklabels(labels, fontsize=8)
    ax.set_xlabel("(arity, dimension)")
    ax.set_ylabel("rank")
    ax.set_title("homology ranks of the cell complexes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _spy_figure(path: Path) -> None:
    fig, axes = plt.subplots(1, 3, figsize=(9.6, 3.4))
    for ax, dim in zip(axes, (1, 2, 3)):
        mat = homology.complex_slice(4, dim).boundary_matrix
        data = [_bits(mat.row(i)) for i in range(mat.nrows)]
        ax.imshow(data, cmap="Greys", interpolation="nearest", aspect="auto")
        ax.set_title(f"boundary, arity 4: dim {dim} to {dim - 1}", fontsize=9)
        ax.set_xlabel(f"{mat.ncols} cells")
        ax.set_ylabel(f"{mat.nrows} cells")
        ax.set_xticks([])
        ax.set_yticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _obstruction_figure(path: Path) -> None:
    rows = [v.concat() for v in obstruction.partial_images()]
    rows.append(obstruction.alpha().concat())
    data = [_bits(v) for v in rows]
    fig, ax = plt.subplots(figsize=(7.2, 2.6))
    ax.imshow(data, cmap="Greys", interpolation="nearest", aspect="auto")
    ax.axvline(x=5.5, color="#c03030", linewidth=1.2)
    ax.set_yticks(range(6))
    ax.set_yticklabels([f"image {j + 1}" for j in range(5)] + ["obstruction"],
                       fontsize=8)
    ax.set_xticks(range(17))
    ax.set_xticklabels([f"P{j}" for j in range(6)]
                       + [f"C{j}" for j in range(11)], fontsize=7)
    ax.set_title("boundary images and the obstruction in the 17-dim target",
                 fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(out_dir: Path, checks: list[CheckReport],
                 doc: dict[str, Any]) -> list[Path]:
    """Write checks.csv, certificate.json, and the three figures."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    csv_path = out_dir / "checks.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check_id", "status", "claim"])
        for c in checks:
            writer.writerow([c.check_id, c.status, c.claim])
    written.append(csv_path)

    json_path = out_dir / "certificate.json"
    json_path.write_text(reports.dumps_canonical(doc))
    written.append(json_path)

    for name, fn in (("betti.png", _betti_figure),
                     ("boundary_spy.png", _spy_figure),
                     ("obstruction_rows.png", _obstruction_figure)):
        fig_path = out_dir / name
        fn(fig_path)
        written.append(fig_path)
    return written
