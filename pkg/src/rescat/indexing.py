"""Inverted index with smoothed, max-normalized TF-IDF term weights.

The build runs three stages over the published records: term extraction
(candidate-phrase pipeline per indexed field), global weighting
(document frequencies and smoothed IDF over the whole corpus) and term
weighting (per document-field normalization and final weights).  The
result is an immutable snapshot that any number of readers may share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ConfigurationError, IndexBuildError
from .records import DEFAULT_INDEXED_FIELDS, Record, TEXTUAL_FIELDS, record_to_document
from .textproc import StopList, extract_candidates, load_stoplist, terms_of, tokenize

__all__ = [
    "DEFAULT_FIELD_BOOSTS",
    "IndexConfig",
    "TermStats",
    "WeightEntry",
    "FieldVector",
    "Posting",
    "IndexSnapshot",
    "compute_idf",
    "normalization",
    "term_weight",
    "build_index",
    "lookup",
    "snapshot_to_dict",
]

# The name/application/abstract/features fields carry extra weight at
# query time; everything else defaults to 1.0.
DEFAULT_FIELD_BOOSTS: dict[str, float] = {
    "name": 3.0,
    "application": 2.0,
    "abstract": 1.5,
    "features_text": 1.5,
    "keywords": 1.0,
}


@dataclass(frozen=True)
class IndexConfig:
    """Index build configuration.

    Weights use log base 10 throughout; the base is fixed because
    ranking order is invariant under a change of base (any base rescales
    every weight by the same positive constant).
    """

    indexed_fields: tuple[str, ...] = DEFAULT_INDEXED_FIELDS
    field_boosts: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_FIELD_BOOSTS)
    )
    stoplist_path: Optional[str] = None

    def __post_init__(self):
        if not self.indexed_fields:
            raise ConfigurationError("indexed_fields must not be empty")
        for fld in self.indexed_fields:
            if fld not in TEXTUAL_FIELDS:
                raise ConfigurationError(f"unknown indexable field: {fld!r}")
        for fld, boost in self.field_boosts.items():
            if boost <= 0:
                raise ConfigurationError(f"field boost must be positive: {fld}={boost}")

    def stoplist(self) -> StopList:
        return load_stoplist(self.stoplist_path)

    def boost(self, fld: str) -> float:
        return self.field_boosts.get(fld, 1.0)


@dataclass(frozen=True)
class TermStats:
    """Global statistics of one term: document frequency and IDF."""

    term: str
    df: int
    idf: float


@dataclass(frozen=True)
class WeightEntry:
    """Per term, per document-field weights: raw TF, normalization
    factor (TF over the field's max TF) and final weight TF*IDF*N."""

    tf: int
    norm: float
    weight: float


@dataclass(frozen=True)
class FieldVector:
    """All term entries of one document field."""

    entries: dict[str, WeightEntry]
    max_tf: int


@dataclass(frozen=True)
class Posting:
    """Lookup result: a term's stats plus its postings
    (document id -> field -> weight entry)."""

    stats: TermStats
    postings: dict[int, dict[str, WeightEntry]]


@dataclass(frozen=True)
class IndexSnapshot:
    """Immutable inverted index over one set of published records.

    Treat all contained mappings as read-only: a snapshot is sealed at
    build time and shared freely across concurrent readers.
    """

    corpus_size: int
    terms: dict[str, TermStats]
    postings: dict[str, dict[int, dict[str, WeightEntry]]]
    docs: dict[int, dict[str, FieldVector]]
    config: IndexConfig
    build_id: int = 0


def compute_idf(corpus_size: int, df: int) -> float:
    """Smoothed inverse document frequency: log10(D / (1 + df)).

    The +1 in the denominator removes the division-by-zero case for
    terms absent from the corpus; the price is a negative value whenever
    1 + df exceeds D (a term present in every document).
    """
    if corpus_size < 1:
        raise ValueError("corpus_size must be >= 1")
    if df < 0 or df > corpus_size:
        raise ValueError(f"df must be in [0, {corpus_size}], got {df}")
    return math.log10(corpus_size / (1 + df))


def normalization(tf: int, max_tf: int) -> float:
    """Length normalization factor: TF over the field's maximum TF."""
    if max_tf <= 0:
        raise ValueError("max_tf must be positive")
    if tf <= 0 or tf > max_tf:
        raise ValueError(f"tf must be in [1, {max_tf}], got {tf}")
    return tf / max_tf


def term_weight(tf: int, idf: float, norm: float) -> float:
    """Final term weight: TF * IDF * N."""
    return tf * idf * norm


def build_index(
    records: Sequence[Record] | Iterable[Record],
    config: IndexConfig | None = None,
    build_id: int = 0,
) -> IndexSnapshot:
    """Build an immutable index snapshot over the given records.

    Stage 1 extracts per-field term frequencies through the candidate
    phrase pipeline; stage 2 computes document frequencies (a document
    counts once however many of its fields contain the term) and
    smoothed IDF with D = number of records; stage 3 derives per-field
    normalization factors and final weights.
    """
    if config is None:
        config = IndexConfig()
    records = list(records)
    stoplist = config.stoplist()

    # stage 1: term extraction
    doc_tfs: dict[int, dict[str, dict[str, int]]] = {}
    for record in records:
        if record.id in doc_tfs:
            raise IndexBuildError(f"duplicate record id {record.id}")
        document = record_to_document(record, config.indexed_fields)
        field_tfs: dict[str, dict[str, int]] = {}
        for fld, text in document.fields.items():
            counts = terms_of(extract_candidates(tokenize(text), stoplist, fld))
            if counts:
                field_tfs[fld] = dict(counts)
        doc_tfs[record.id] = field_tfs

    corpus_size = len(records)

    # stage 2: global weight
    dfs: dict[str, int] = {}
    for field_tfs in doc_tfs.values():
        seen = {term for counts in field_tfs.values() for term in counts}
        for term in seen:
            dfs[term] = dfs.get(term, 0) + 1
    terms = {
        term: TermStats(term, df, compute_idf(corpus_size, df))
        for term, df in sorted(dfs.items())
    }

    # stage 3: term weighting
    postings: dict[str, dict[int, dict[str, WeightEntry]]] = {t: {} for t in terms}
    docs: dict[int, dict[str, FieldVector]] = {}
    for doc_id, field_tfs in doc_tfs.items():
        vectors: dict[str, FieldVector] = {}
        for fld, counts in field_tfs.items():
            max_tf = max(counts.values())
            entries: dict[str, WeightEntry] = {}
            for term, tf in counts.items():
                norm = normalization(tf, max_tf)
                entry = WeightEntry(tf, norm, term_weight(tf, terms[term].idf, norm))
                entries[term] = entry
                postings[term].setdefault(doc_id, {})[fld] = entry
            vectors[fld] = FieldVector(entries, max_tf)
        docs[doc_id] = vectors

    return IndexSnapshot(
        corpus_size=corpus_size,
        terms=terms,
        postings=postings,
        docs=docs,
        config=config,
        build_id=build_id,
    )


def lookup(snapshot: IndexSnapshot, term: str) -> Posting:
    """Exact term lookup with the same case folding as indexing.

    Unknown terms yield df=0 with empty postings; the reported IDF is
    then log10(D/1) by the smoothing rule (0.0 on an empty corpus), and
    it never influences scoring because there are no postings.
    """
    folded = term.lower()
    stats = snapshot.terms.get(folded)
    if stats is not None:
        return Posting(stats, snapshot.postings.get(folded, {}))
    idf = compute_idf(snapshot.corpus_size, 0) if snapshot.corpus_size >= 1 else 0.0
    return Posting(TermStats(folded, 0, idf), {})


def snapshot_to_dict(snapshot: IndexSnapshot) -> dict:
    """Debug dump of a snapshot (not a stability contract)."""
    return {
        "build_id": snapshot.build_id,
        "D": snapshot.corpus_size,
        "terms": {
            term: {
                "df": stats.df,
                "idf": stats.idf,
                "postings": {
                    str(doc_id): {
                        fld: {"tf": e.tf, "norm": e.norm, "weight": e.weight}
                        for fld, e in fields.items()
                    }
                    for doc_id, fields in snapshot.postings[term].items()
                },
            }
            for term, stats in snapshot.terms.items()
        },
    }
