"""rescat: a catalog and keyword-search engine for research-resource records.

Records move through a pending/published lifecycle; published records
are indexed into an immutable snapshot and ranked with a smoothed,
max-normalized tf-idf weighting over a handful of boosted text fields.
"""

from .api import create_app
from .catalog import Catalog, CheckReport, fixture_corpus_path, load_corpus, save_corpus
from .errors import (
    AlreadyPublishedError,
    ConfigurationError,
    CorpusFormatError,
    EmptyQueryError,
    IndexBuildError,
    NotFoundError,
    RescatError,
    ValidationFailedError,
)
from .indexing import (
    DEFAULT_FIELD_BOOSTS,
    IndexConfig,
    IndexSnapshot,
    build_index,
    compute_idf,
    lookup,
    normalization,
    term_weight,
)
from .query import Hit, Query, ResultPage, parse_query, render_score, score_document, search
from .records import (
    DEFAULT_INDEXED_FIELDS,
    Document,
    FirstCategory,
    License,
    Platform,
    Record,
    SecondCategory,
    Status,
    Violation,
    record_from_fields,
    record_to_document,
    record_to_fields,
    validate_record,
)
from .stats import CorpusStats, FacetCount, compute_stats, render_stats, stats_to_dict
from .textproc import (
    CandidatePhrase,
    StopList,
    Token,
    TokenKind,
    default_stoplist,
    extract_candidates,
    load_stoplist,
    terms_of,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AlreadyPublishedError",
    "Catalog",
    "CandidatePhrase",
    "CheckReport",
    "ConfigurationError",
    "CorpusFormatError",
    "CorpusStats",
    "DEFAULT_FIELD_BOOSTS",
    "DEFAULT_INDEXED_FIELDS",
    "Document",
    "EmptyQueryError",
    "FacetCount",
    "FirstCategory",
    "Hit",
    "IndexBuildError",
    "IndexConfig",
    "IndexSnapshot",
    "License",
    "NotFoundError",
    "Platform",
    "Query",
    "Record",
    "RescatError",
    "ResultPage",
    "SecondCategory",
    "Status",
    "StopList",
    "Token",
    "TokenKind",
    "ValidationFailedError",
    "Violation",
    "build_index",
    "compute_idf",
    "compute_stats",
    "create_app",
    "default_stoplist",
    "extract_candidates",
    "fixture_corpus_path",
    "load_corpus",
    "load_stoplist",
    "lookup",
    "normalization",
    "parse_query",
    "record_from_fields",
    "record_to_document",
    "record_to_fields",
    "render_score",
    "render_stats",
    "save_corpus",
    "score_document",
    "search",
    "stats_to_dict",
    "term_weight",
    "terms_of",
    "tokenize",
    "validate_record",
]
