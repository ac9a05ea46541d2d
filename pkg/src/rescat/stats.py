"""Corpus landscape statistics: facet percentages and citation totals.

Facets follow the catalog's controlled vocabularies where one exists
(omics categories, record nature, license, platform) and exact-string
grouping where the field is free text (journal, country, institution).
Percentages are fractions of the total record count, rounded half-up to
two decimals.  A record with several omics categories counts once per
category, so that facet's percentages may sum past 100.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Optional

from .records import License, Platform, Record

__all__ = ["FacetCount", "CorpusStats", "compute_stats", "render_stats", "stats_to_dict"]


def percent_of(count: int, total: int) -> float:
    """100 * count / total, rounded half-up to 2 decimals (0 when empty)."""
    if total == 0:
        return 0.0
    raw = Decimal(100 * count) / Decimal(total)
    return float(raw.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class FacetCount:
    label: str
    count: int
    percent: float


@dataclass(frozen=True)
class CorpusStats:
    """Aggregates over one record list."""

    total_records: int
    first_categories: tuple[FacetCount, ...]
    second_categories: tuple[FacetCount, ...]
    journals: tuple[FacetCount, ...]
    countries: tuple[FacetCount, ...]
    institutions: tuple[FacetCount, ...]
    percent_free: float
    platform_counts: dict[str, int] = field(default_factory=dict)
    online_offline_ratio: Optional[float] = None
    citation_total: int = 0
    citation_count: int = 0
    citation_mean: Optional[float] = None


def _facet(counter: Counter, total: int) -> tuple[FacetCount, ...]:
    # descending by count, then label for a stable order
    items = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    return tuple(FacetCount(label, count, percent_of(count, total)) for label, count in items)


def compute_stats(records: Iterable[Record]) -> CorpusStats:
    """Tally the landscape aggregates for a record list.

    Order-independent.  Journal/country/institution facets count only
    records with the field present; the citation mean is taken over the
    records that carry a citation count and is absent when none do.
    """
    records = list(records)
    total = len(records)

    first: Counter = Counter()
    second: Counter = Counter()
    journals: Counter = Counter()
    countries: Counter = Counter()
    institutions: Counter = Counter()
    platforms: Counter = Counter()
    free_count = 0
    citation_total = 0
    citation_count = 0

    for record in records:
        if record.first_category is not None:
            first[record.first_category.value] += 1
        for category in record.second_categories:
            second[category.value] += 1
        if record.journal:
            journals[record.journal] += 1
        if record.country:
            countries[record.country] += 1
        if record.institution:
            institutions[record.institution] += 1
        if record.platform is not None:
            platforms[record.platform.value] += 1
        if record.license is License.FREE:
            free_count += 1
        if record.scholar_citations is not None:
            citation_total += record.scholar_citations
            citation_count += 1

    online = platforms.get(Platform.ONLINE.value, 0) + platforms.get(Platform.BOTH.value, 0)
    offline = platforms.get(Platform.OFFLINE.value, 0) + platforms.get(Platform.BOTH.value, 0)
    ratio = (online / offline) if offline else None

    return CorpusStats(
        total_records=total,
        first_categories=_facet(first, total),
        second_categories=_facet(second, total),
        journals=_facet(journals, total),
        countries=_facet(countries, total),
        institutions=_facet(institutions, total),
        percent_free=percent_of(free_count, total),
        platform_counts=dict(platforms),
        online_offline_ratio=ratio,
        citation_total=citation_total,
        citation_count=citation_count,
        citation_mean=round(citation_total / citation_count, 1) if citation_count else None,
    )


# facets shown in the landscape report, in display order
REPORT_FACETS = (
    ("Omics Categories", "second_categories"),
    ("Leading Journals", "journals"),
    ("Leading Institutions", "institutions"),
    ("Leading Countries", "countries"),
)


def facet_series(stats: CorpusStats) -> dict[str, list[tuple[str, float]]]:
    """Per-facet (label, percent) series, sorted descending by percent;
    the input for bar charts and delimited output."""
    out: dict[str, list[tuple[str, float]]] = {}
    for title, attr in REPORT_FACETS:
        rows = getattr(stats, attr)
        out[title] = [(row.label, row.percent) for row in rows]
    return out


def render_stats(stats: CorpusStats) -> str:
    """Plain-text landscape report: one table per facet plus totals."""
    lines: list[str] = []
    lines.append(f"Total records: {stats.total_records}")
    lines.append(f"Free (open access): {stats.percent_free:.2f}%")
    if stats.online_offline_ratio is not None:
        lines.append(f"Online to stand-alone ratio: {stats.online_offline_ratio:.1f}")
    if stats.citation_count:
        lines.append(
            f"Citations: total {stats.citation_total:,} over {stats.citation_count} "
            f"records, average {stats.citation_mean:.1f}"
        )
    else:
        lines.append("Citations: none recorded")
    for title, attr in REPORT_FACETS:
        rows = getattr(stats, attr)
        lines.append("")
        lines.append(title)
        if not rows:
            lines.append("  (none)")
            continue
        width = max(len(row.label) for row in rows)
        for row in rows:
            lines.append(f"  {row.label:<{width}}  {row.percent:.2f}")
    return "\n".join(lines)


def stats_to_dict(stats: CorpusStats) -> dict:
    """JSON-ready view of the aggregates."""
    def rows(entries):
        return [
            {"label": e.label, "count": e.count, "percent": e.percent} for e in entries
        ]

    return {
        "total_records": stats.total_records,
        "first_categories": rows(stats.first_categories),
        "second_categories": rows(stats.second_categories),
        "journals": rows(stats.journals),
        "countries": rows(stats.countries),
        "institutions": rows(stats.institutions),
        "percent_free": stats.percent_free,
        "platform_counts": stats.platform_counts,
        "online_offline_ratio": stats.online_offline_ratio,
        "citation_total": stats.citation_total,
        "citation_count": stats.citation_count,
        "citation_mean": stats.citation_mean,
    }
