"""Figure and CSV rendering for CLI reports.

Reports with a natural matrix (convolution tables, automorphism tables,
character tables) get a heatmap PNG and a CSV next to the JSON output.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_matrix(matrix, title: str, out_json_path: str,
                  row_labels=None, col_labels=None) -> list[str]:
    """Write <out>.png heatmap and <out>.csv next to the JSON report.

    `matrix` is a rectangular list of real numbers.  Returns the written
    paths (empty when the matrix is empty).
    """
    if not matrix or not matrix[0]:
        return []
    base = Path(out_json_path).with_suffix("")
    csv_path = base.with_suffix(".csv")
    png_path = base.with_suffix(".png")

    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        header = [""] + [str(c) for c in
                         (col_labels or range(len(matrix[0])))]
        writer.writerow(header)
        labels = row_labels or range(len(matrix))
        for lab, row in zip(labels, matrix):
            writer.writerow([str(lab)] + [repr(float(v)) for v in row])

    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(matrix, cmap="viridis")
    ax.set_title(title)
    if col_labels is not None and len(col_labels) <= 16:
        ax.set_xticks(range(len(col_labels)))
        ax.set_xticklabels([str(c) for c in col_labels], rotation=45,
                           ha="right")
    if row_labels is not None and len(row_labels) <= 16:
        ax.set_yticks(range(len(row_labels)))
        ax.set_yticklabels([str(r) for r in row_labels])
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [str(csv_path), str(png_path)]
