"""Landscape report rendering: facet bar charts and delimited output.

Writes one horizontal bar chart per facet (omics categories, journals,
countries) and a facets.csv with every (facet, label, count, percent)
row, all into one output directory.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .stats import CorpusStats, REPORT_FACETS

__all__ = ["write_facet_charts", "write_facet_csv", "write_report_files"]

# charted facets: omics breakdown plus the two free-text contribution facets
CHART_FACETS = (
    ("Omics Categories", "second_categories", "omics"),
    ("Leading Journals", "journals", "journals"),
    ("Leading Countries", "countries", "countries"),
)

MAX_BARS = 15


def write_facet_charts(stats: CorpusStats, outdir: str | Path, dpi: int = 150) -> list[Path]:
    """Render one bar chart per facet into ``outdir``; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for title, attr, stem in CHART_FACETS:
        rows = getattr(stats, attr)[:MAX_BARS]
        path = outdir / f"{stem}.png"
        fig, ax = plt.subplots(figsize=(7, max(2.0, 0.45 * len(rows) + 1.2)))
        if rows:
            labels = [row.label for row in rows]
            values = [row.percent for row in rows]
            ypos = range(len(rows))
            ax.barh(ypos, values, color="#3a7d44")
            ax.set_yticks(list(ypos))
            ax.set_yticklabels(labels)
            ax.invert_yaxis()
            for y, value in zip(ypos, values):
                ax.annotate(
                    f"{value:.2f}",
                    (value, y),
                    xytext=(3, 0),
                    textcoords="offset points",
                    va="center",
                    fontsize=8,
                )
        else:
            ax.text(0.5, 0.5, "no data", ha="center", va="center", transform=ax.transAxes)
            ax.set_xticks([])
            ax.set_yticks([])
        ax.set_xlabel("share of records (%)")
        ax.set_title(f"{title} (n={stats.total_records})")
        fig.tight_layout()
        fig.savefig(path, dpi=dpi)
        plt.close(fig)
        written.append(path)
    return written


def write_facet_csv(stats: CorpusStats, path: str | Path) -> Path:
    """Write every facet row as delimited output: facet,label,count,percent."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["facet", "label", "count", "percent"])
        for title, attr in REPORT_FACETS:
            for row in getattr(stats, attr):
                writer.writerow([title, row.label, row.count, f"{row.percent:.2f}"])
    return path


def write_report_files(stats: CorpusStats, outdir: str | Path) -> list[Path]:
    """Write the full landscape report: charts plus facets.csv."""
    outdir = Path(outdir)
    written = write_facet_charts(stats, outdir)
    written.append(write_facet_csv(stats, outdir / "facets.csv"))
    return written
