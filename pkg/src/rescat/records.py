"""Catalog record model: the 40-feature schema, validation and the
document projection that feeds the indexing pipeline.

A ``Record`` is one catalog entry for a scientific tool, database,
directory or resource.  ``validate_record`` checks a record-shaped field
map and returns violations as data (an empty report means valid);
``record_to_document`` projects a record onto the per-field raw text
that the indexer consumes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields as dc_fields
from datetime import datetime
from typing import Any, Iterable, Mapping, Optional
from urllib.parse import urlparse

from .errors import ConfigurationError

__all__ = [
    "FirstCategory",
    "SecondCategory",
    "Platform",
    "License",
    "Status",
    "Record",
    "Document",
    "Violation",
    "validate_record",
    "record_to_document",
    "record_to_fields",
    "record_from_fields",
    "DEFAULT_INDEXED_FIELDS",
    "TEXTUAL_FIELDS",
]


class FirstCategory(enum.Enum):
    """Nature of the record."""

    SOFTWARE = "Software"
    DATABASE = "Database"
    DIRECTORY = "Directory"
    RESOURCE = "Resource"
    MISCELLANEOUS = "Miscellaneous"


class SecondCategory(enum.Enum):
    """Omics relevance of the record; a record may carry several."""

    GENOMICS = "Genomics"
    TRANSCRIPTOMICS = "Transcriptomics"
    PROTEOMICS = "Proteomics"
    METABOLOMICS = "Metabolomics"
    OTHERS = "Others"


class Platform(enum.Enum):
    """Availability: how the record is accessed."""

    ONLINE = "Online"
    OFFLINE = "Offline"
    BOTH = "Both"


class License(enum.Enum):
    """Accessibility: free or commercial."""

    FREE = "Free"
    COMMERCIAL = "Commercial"


class Status(enum.Enum):
    """Lifecycle state; only Published records are indexed."""

    PENDING = "Pending"
    PUBLISHED = "Published"


@dataclass
class Record:
    """One catalog entry (the full 40-feature schema).

    ``id``, ``timestamp`` and ``status`` are assigned by the catalog at
    submission time; nearly everything else is optional metadata.
    ``extras`` carries unknown keys found in corpus files so they
    round-trip unchanged.
    """

    id: int
    name: str
    timestamp: str = ""
    status: Status = Status.PENDING
    original_code: Optional[str] = None
    record_creator: Optional[str] = None
    record_registrar: Optional[str] = None
    record_maintainer: Optional[str] = None
    first_category: Optional[FirstCategory] = None
    second_categories: frozenset[SecondCategory] = frozenset()
    application: Optional[str] = None
    organism_common_name: Optional[str] = None
    organism_scientific_name: Optional[str] = None
    authors_developers: Optional[list[str]] = None
    keywords: Optional[list[str]] = None
    features_text: Optional[str] = None
    platform: Optional[Platform] = None
    operating_system: Optional[str] = None
    other_system_requirements: Optional[str] = None
    programming_language: Optional[str] = None
    license: Optional[License] = None
    price: Optional[float] = None
    price_currency: Optional[str] = None
    version: Optional[str] = None
    abstract: Optional[str] = None
    publication_citation: Optional[str] = None
    journal: Optional[str] = None
    journal_impact_factor: Optional[float] = None
    publisher: Optional[str] = None
    scholar_citations: Optional[int] = None
    web_link: Optional[str] = None
    tutorial_link: Optional[str] = None
    article_link: Optional[str] = None
    contact_information: Optional[str] = None
    email: Optional[str] = None
    institution: Optional[str] = None
    country: Optional[str] = None
    user_ranking: Optional[int] = None
    submit_review: Optional[str] = None
    miscellaneous: Optional[str] = None
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Document:
    """Indexable projection of a record: per-field raw text."""

    record_id: int
    fields: dict[str, str]


@dataclass(frozen=True)
class Violation:
    """One field-level validation failure."""

    field: str
    rule: str
    message: str


# Fields whose content can be indexed, with an extractor producing raw
# text.  List-valued fields are joined with ", " so that each item ends
# up in its own candidate phrase.
TEXTUAL_FIELDS: dict[str, Any] = {
    "name": lambda r: r.name,
    "application": lambda r: r.application,
    "abstract": lambda r: r.abstract,
    "features_text": lambda r: r.features_text,
    "keywords": lambda r: ", ".join(r.keywords) if r.keywords else None,
    "organism_common_name": lambda r: r.organism_common_name,
    "organism_scientific_name": lambda r: r.organism_scientific_name,
    "authors_developers": lambda r: ", ".join(r.authors_developers)
    if r.authors_developers
    else None,
    "operating_system": lambda r: r.operating_system,
    "other_system_requirements": lambda r: r.other_system_requirements,
    "programming_language": lambda r: r.programming_language,
    "publication_citation": lambda r: r.publication_citation,
    "journal": lambda r: r.journal,
    "publisher": lambda r: r.publisher,
    "institution": lambda r: r.institution,
    "country": lambda r: r.country,
    "submit_review": lambda r: r.submit_review,
    "miscellaneous": lambda r: r.miscellaneous,
}

DEFAULT_INDEXED_FIELDS = ("name", "application", "abstract", "features_text", "keywords")

_CATEGORIES_NEEDING_SECOND = {FirstCategory.SOFTWARE, FirstCategory.DATABASE}

# set-like and list-like inputs accepted for multi-valued fields
_ITERABLE_TYPES = (list, tuple, set, frozenset)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _enum_values(enum_cls) -> str:
    return ", ".join(m.value for m in enum_cls)


def _check_enum(value: Any, enum_cls, fld: str, out: list[Violation]) -> None:
    if isinstance(value, enum_cls):
        return
    try:
        enum_cls(value)
    except ValueError:
        out.append(
            Violation(fld, "enum", f"must be one of: {_enum_values(enum_cls)}")
        )


def validate_record(candidate: Mapping[str, Any] | Record) -> list[Violation]:
    """Check a record-shaped field map against the schema invariants.

    Returns the list of violations; an empty list means the candidate is
    valid.  Violations are data, not failures: this function never
    raises on bad content.  Pure and deterministic.
    """
    if isinstance(candidate, Record):
        candidate = record_to_fields(candidate)

    out: list[Violation] = []

    name = candidate.get("name")
    if name is None or not isinstance(name, str) or not name.strip():
        out.append(Violation("name", "non_empty", "name is required and must be non-empty"))

    first = candidate.get("first_category")
    if first is None:
        out.append(
            Violation(
                "first_category",
                "required",
                f"must be one of: {_enum_values(FirstCategory)}",
            )
        )
    else:
        _check_enum(first, FirstCategory, "first_category", out)

    # second categories: closed vocabulary, required for Software/Database
    seconds = candidate.get("second_categories")
    second_values: set[SecondCategory] = set()
    if seconds is not None:
        if not isinstance(seconds, _ITERABLE_TYPES):
            out.append(Violation("second_categories", "type", "must be a collection"))
        else:
            for item in seconds:
                if isinstance(item, SecondCategory):
                    second_values.add(item)
                    continue
                try:
                    second_values.add(SecondCategory(item))
                except ValueError:
                    out.append(
                        Violation(
                            "second_categories",
                            "enum",
                            f"{item!r} is not one of: {_enum_values(SecondCategory)}",
                        )
                    )
    first_value: Optional[FirstCategory] = None
    if isinstance(first, FirstCategory):
        first_value = first
    elif first is not None:
        try:
            first_value = FirstCategory(first)
        except ValueError:
            pass
    if first_value in _CATEGORIES_NEEDING_SECOND and not second_values:
        out.append(
            Violation(
                "second_categories",
                "required_for_category",
                f"at least one second category is required for {first_value.value} records",
            )
        )

    for fld, enum_cls in (("platform", Platform), ("license", License), ("status", Status)):
        value = candidate.get(fld)
        if value is not None:
            _check_enum(value, enum_cls, fld, out)

    rid = candidate.get("id")
    if rid is not None and (not isinstance(rid, int) or isinstance(rid, bool) or rid <= 0):
        out.append(Violation("id", "positive", "id must be a positive integer"))

    ranking = candidate.get("user_ranking")
    if ranking is not None and (
        not isinstance(ranking, int) or isinstance(ranking, bool) or not 1 <= ranking <= 5
    ):
        out.append(Violation("user_ranking", "range", "user_ranking must be an integer in 1..5"))

    citations = candidate.get("scholar_citations")
    if citations is not None and (
        not isinstance(citations, int) or isinstance(citations, bool) or citations < 0
    ):
        out.append(
            Violation("scholar_citations", "non_negative", "must be a non-negative integer")
        )

    for fld in ("journal_impact_factor", "price"):
        value = candidate.get(fld)
        if value is not None and (not _is_number(value) or value < 0):
            out.append(Violation(fld, "non_negative", "must be a non-negative number"))

    link = candidate.get("web_link")
    if link is not None:
        parsed = urlparse(link) if isinstance(link, str) else None
        if parsed is None or not parsed.scheme or not parsed.netloc:
            out.append(Violation("web_link", "absolute_url", "must be an absolute URL"))

    timestamp = candidate.get("timestamp")
    if timestamp not in (None, ""):
        if not isinstance(timestamp, str):
            out.append(Violation("timestamp", "iso8601", "must be an ISO-8601 date-time string"))
        else:
            try:
                datetime.fromisoformat(timestamp.replace("Z", "+00:00"))
            except ValueError:
                out.append(
                    Violation("timestamp", "iso8601", "must be an ISO-8601 date-time string")
                )

    for fld in ("authors_developers", "keywords"):
        value = candidate.get(fld)
        if value is not None:
            if not isinstance(value, _ITERABLE_TYPES) or not all(
                isinstance(item, str) for item in value
            ):
                out.append(Violation(fld, "string_list", "must be a list of strings"))

    return out


def record_to_document(record: Record, indexed_fields: Iterable[str] | None = None) -> Document:
    """Project a record onto per-field raw text for indexing.

    Text passes through unaltered; absent fields map to the empty
    string.  No tokenization happens here.
    """
    if indexed_fields is None:
        indexed_fields = DEFAULT_INDEXED_FIELDS
    texts: dict[str, str] = {}
    for fld in indexed_fields:
        extractor = TEXTUAL_FIELDS.get(fld)
        if extractor is None:
            raise ConfigurationError(f"unknown indexable field: {fld!r}")
        value = extractor(record)
        texts[fld] = value if value is not None else ""
    return Document(record_id=record.id, fields=texts)


_RECORD_FIELDS = tuple(f.name for f in dc_fields(Record) if f.name != "extras")


def record_to_fields(record: Record) -> dict[str, Any]:
    """Flatten a Record into the JSON-ready field map.

    Enums become their capitalized names, second categories a sorted
    list; ``None`` fields are omitted; unknown keys from ``extras`` are
    re-emitted at the top level so corpus files round-trip.
    """
    out: dict[str, Any] = {}
    for fld in _RECORD_FIELDS:
        value = getattr(record, fld)
        if value is None:
            continue
        if isinstance(value, enum.Enum):
            value = value.value
        elif fld == "second_categories":
            if not value:
                continue
            value = sorted(c.value for c in value)
        elif isinstance(value, list):
            value = list(value)
        out[fld] = value
    out.update(record.extras)
    return out


def record_from_fields(fields: Mapping[str, Any]) -> Record:
    """Build a Record from a parsed field map (e.g. one corpus line).

    Assumes ``validate_record(fields)`` passed; raises ``ValueError`` on
    values that cannot be coerced (bad enum names, non-integer id).
    Unknown keys are preserved in ``extras``.
    """
    known = dict(fields)
    extras = {k: known.pop(k) for k in list(known) if k not in _RECORD_FIELDS}

    rid = known.pop("id", None)
    if rid is None:
        raise ValueError("record field map is missing 'id'")
    name = known.pop("name", None)
    if name is None:
        raise ValueError("record field map is missing 'name'")

    def pop_enum(key, enum_cls):
        value = known.pop(key, None)
        if value is None or isinstance(value, enum_cls):
            return value
        return enum_cls(value)

    first = pop_enum("first_category", FirstCategory)
    platform = pop_enum("platform", Platform)
    license_ = pop_enum("license", License)
    status = pop_enum("status", Status) or Status.PENDING

    seconds = known.pop("second_categories", None) or ()
    second_categories = frozenset(
        c if isinstance(c, SecondCategory) else SecondCategory(c) for c in seconds
    )

    return Record(
        id=int(rid),
        name=name,
        first_category=first,
        second_categories=second_categories,
        platform=platform,
        license=license_,
        status=status,
        extras=extras,
        **known,
    )
