"""Keyword query parsing, scoring and ranked, paginated retrieval.

A query matches every document containing at least one of its terms in
an indexed field (OR semantics).  The matching score sums the
field-boosted stored term weights, clamping non-positive per-term
weights to zero so that a ubiquitous term keeps its documents in the
result set without reordering it perversely.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping, Optional

from .errors import EmptyQueryError
from .indexing import IndexSnapshot
from .records import Record
from .textproc import StopList, TokenKind, tokenize

__all__ = [
    "Query",
    "Hit",
    "ResultPage",
    "parse_query",
    "score_document",
    "search",
    "render_score",
    "make_snippet",
    "describe_page",
]

SNIPPET_LENGTH = 300
MAX_PER_PAGE = 100


@dataclass(frozen=True)
class Query:
    """A normalized keyword query: lowercased, stop words removed,
    duplicates dropped keeping first occurrence."""

    raw: str
    terms: tuple[str, ...]


@dataclass(frozen=True)
class Hit:
    """One ranked search hit with its display fields."""

    record_id: int
    matching_score: float
    matched_terms: tuple[str, ...]
    name: str
    application: Optional[str]
    first_category: Optional[str]
    second_categories: tuple[str, ...]
    availability: Optional[str]
    accessibility: Optional[str]
    scholar_citations: Optional[int]
    abstract_snippet: str
    features_snippet: str


@dataclass(frozen=True)
class ResultPage:
    """One page of ranked hits."""

    hits: tuple[Hit, ...]
    total_hits: int
    page: int
    per_page: int


def parse_query(raw: str, stoplist: StopList) -> Query:
    """Normalize a raw query with the indexing pipeline's rules.

    Raises EmptyQueryError when no term survives.
    """
    terms: list[str] = []
    seen: set[str] = set()
    for token in tokenize(raw):
        if token.kind is not TokenKind.WORD:
            continue
        word = token.surface.lower()
        if word in stoplist or word in seen:
            continue
        seen.add(word)
        terms.append(word)
    if not terms:
        raise EmptyQueryError(raw)
    return Query(raw=raw, terms=tuple(terms))


def score_document(
    snapshot: IndexSnapshot,
    doc_id: int,
    query: Query,
    boosts: Mapping[str, float] | None = None,
) -> float:
    """Sum of boosted per-term weights over all indexed fields.

    Each term contributes boost(field) * max(weight, 0) per field it
    occurs in; a document containing no query term scores 0.
    """
    if boosts is None:
        boosts = snapshot.config.field_boosts
    total = 0.0
    for term in query.terms:
        postings = snapshot.postings.get(term)
        if not postings:
            continue
        fields = postings.get(doc_id)
        if not fields:
            continue
        contribution = 0.0
        for fld, entry in fields.items():
            if entry.weight > 0:
                contribution += boosts.get(fld, 1.0) * entry.weight
        total += contribution
    return total


def make_snippet(text: Optional[str], limit: int = SNIPPET_LENGTH) -> str:
    """Truncate display text at a word boundary, appending an ellipsis."""
    if not text:
        return ""
    if len(text) <= limit:
        return text
    cut = text[:limit]
    head, _, _ = cut.rpartition(" ")
    return (head or cut).rstrip() + "…"


def render_score(score: float) -> str:
    """Fixed-point display form: exactly 3 fraction digits, half-up."""
    return str(Decimal(str(score)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def _sort_key(record: Record, score: float):
    citations = record.scholar_citations if record.scholar_citations is not None else 0
    return (-score, -citations, record.id)


def search(
    snapshot: IndexSnapshot,
    records: Mapping[int, Record],
    raw_query: str,
    page: int = 1,
    per_page: int = 10,
) -> ResultPage:
    """Ranked, paginated retrieval over one snapshot.

    The candidate set is the union of the query terms' postings; every
    candidate is scored, sorted by (score desc, scholar citations desc,
    id asc) and paginated.  A page past the end yields empty hits with
    the true total.
    """
    if page < 1:
        raise ValueError("page must be >= 1")
    if not 1 <= per_page <= MAX_PER_PAGE:
        raise ValueError(f"per_page must be in 1..{MAX_PER_PAGE}")

    query = parse_query(raw_query, snapshot.config.stoplist())

    candidates: set[int] = set()
    for term in query.terms:
        candidates.update(snapshot.postings.get(term, ()))

    scored = []
    for doc_id in candidates:
        record = records[doc_id]
        score = score_document(snapshot, doc_id, query)
        matched = tuple(
            t for t in query.terms if doc_id in snapshot.postings.get(t, {})
        )
        scored.append((record, score, matched))
    scored.sort(key=lambda item: _sort_key(item[0], item[1]))

    start = (page - 1) * per_page
    window = scored[start : start + per_page]
    hits = tuple(
        Hit(
            record_id=record.id,
            matching_score=score,
            matched_terms=matched,
            name=record.name,
            application=record.application,
            first_category=record.first_category.value if record.first_category else None,
            second_categories=tuple(sorted(c.value for c in record.second_categories)),
            availability=record.platform.value if record.platform else None,
            accessibility=record.license.value if record.license else None,
            scholar_citations=record.scholar_citations,
            abstract_snippet=make_snippet(record.abstract),
            features_snippet=make_snippet(record.features_text),
        )
        for record, score, matched in window
    )
    return ResultPage(hits=hits, total_hits=len(scored), page=page, per_page=per_page)


def describe_page(result: ResultPage) -> str:
    """Human-readable result header, e.g. "Displaying 1-10 of 282 results."."""
    if result.total_hits == 0 or not result.hits:
        return f"Displaying 0 of {result.total_hits} results."
    start = (result.page - 1) * result.per_page + 1
    end = start + len(result.hits) - 1
    return f"Displaying {start}-{end} of {result.total_hits} results."
