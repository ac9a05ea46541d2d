"""Persistent record catalog with the pending -> published lifecycle.

Records enter the catalog as Pending and become searchable only after
being published and picked up by a reindex.  The catalog keeps one
immutable active index snapshot and swaps it atomically on reindex, so
readers always see either the previous or the new snapshot, never a
mix.  Mutations are serialized through one writer lock; reads never
block.

Persistence is a flat JSON Lines corpus file, one record object per
line.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Optional

from .errors import (
    AlreadyPublishedError,
    CorpusFormatError,
    NotFoundError,
    ValidationFailedError,
)
from .indexing import IndexConfig, IndexSnapshot, build_index
from .query import ResultPage, search
from .records import (
    Record,
    Status,
    record_from_fields,
    record_to_fields,
    validate_record,
)

__all__ = ["Catalog", "CheckReport", "fixture_corpus_path", "load_corpus", "save_corpus"]


def fixture_corpus_path() -> Path:
    """Path of the bundled 20-record sample corpus."""
    from importlib.resources import files

    return Path(str(files("rescat.data").joinpath("fixture_corpus.jsonl")))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of the post-reindex consistency check."""

    expected_docs: int
    indexed_docs: int
    missing_ids: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.missing_ids and self.expected_docs == self.indexed_docs


class Catalog:
    """In-memory record catalog bound to an optional corpus file."""

    def __init__(
        self,
        records: Optional[dict[int, Record]] = None,
        config: Optional[IndexConfig] = None,
        path: Optional[str | Path] = None,
    ):
        self._lock = threading.Lock()
        self.records: dict[int, Record] = dict(records or {})
        self.config = config or IndexConfig()
        self.path = Path(path) if path is not None else None
        self._next_id = max(self.records, default=0) + 1
        self._build_counter = 0
        self.active_snapshot: IndexSnapshot = build_index([], self.config, build_id=0)

    # -- lifecycle ----------------------------------------------------

    def submit(self, candidate: Mapping[str, Any]) -> int:
        """Validate and store a new record as Pending; returns its id.

        The id, timestamp and status fields are assigned here; any
        values for them in the candidate are ignored.
        """
        fields = {
            k: v for k, v in dict(candidate).items() if k not in ("id", "status", "timestamp")
        }
        violations = validate_record(fields)
        if violations:
            raise ValidationFailedError(violations)
        with self._lock:
            rid = self._next_id
            self._next_id += 1
            fields["id"] = rid
            record = record_from_fields(fields)
            record.status = Status.PENDING
            record.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
            self.records[rid] = record
        return rid

    def publish(self, record_id: int) -> Record:
        """Flip a Pending record to Published.

        The record becomes searchable only after the next reindex.
        """
        with self._lock:
            record = self.records.get(record_id)
            if record is None:
                raise NotFoundError(record_id)
            if record.status is Status.PUBLISHED:
                raise AlreadyPublishedError(record_id)
            record.status = Status.PUBLISHED
            return record

    def get(self, record_id: int) -> Record:
        """Exact id lookup returning the full record, whatever its status."""
        record = self.records.get(record_id)
        if record is None:
            raise NotFoundError(record_id)
        return record

    def published_records(self) -> list[Record]:
        return [r for r in self.records.values() if r.status is Status.PUBLISHED]

    def reindex(self) -> tuple[IndexSnapshot, CheckReport]:
        """Rebuild the index over the Published records and swap it in.

        A build failure propagates and leaves the previous snapshot
        active.  The returned check report verifies that every published
        record landed in the new snapshot.
        """
        with self._lock:
            published = self.published_records()
            snapshot = build_index(published, self.config, build_id=self._build_counter + 1)
            self._build_counter = snapshot.build_id
            missing = tuple(
                sorted(r.id for r in published if r.id not in snapshot.docs)
            )
            report = CheckReport(
                expected_docs=len(published),
                indexed_docs=len(snapshot.docs),
                missing_ids=missing,
            )
            self.active_snapshot = snapshot
        return snapshot, report

    # -- search -------------------------------------------------------

    def search(self, raw_query: str, page: int = 1, per_page: int = 10) -> ResultPage:
        """Search the active snapshot; served entirely from one snapshot
        even if a reindex completes mid-call."""
        snapshot = self.active_snapshot
        return search(snapshot, self.records, raw_query, page=page, per_page=per_page)

    # -- persistence ----------------------------------------------------

    def save(self, path: Optional[str | Path] = None) -> Path:
        """Write the corpus file; see save_corpus."""
        target = Path(path) if path is not None else self.path
        if target is None:
            raise ValueError("no corpus path configured")
        with self._lock:
            save_corpus(self, target)
        return target


def load_corpus(
    path: str | Path, config: Optional[IndexConfig] = None
) -> Catalog:
    """Load a JSON Lines corpus file into a fresh catalog.

    Every line must parse as a JSON object that passes validation;
    the first malformed line aborts the load with its line number.
    """
    path = Path(path)
    records: dict[int, Record] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(path, line_no, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict):
                raise CorpusFormatError(path, line_no, "record must be a JSON object")
            if "id" not in obj:
                raise CorpusFormatError(path, line_no, "record is missing 'id'")
            violations = validate_record(obj)
            if violations:
                detail = "; ".join(f"{v.field}: {v.message}" for v in violations)
                raise CorpusFormatError(path, line_no, f"invalid record: {detail}")
            try:
                record = record_from_fields(obj)
            except (ValueError, TypeError) as exc:
                raise CorpusFormatError(path, line_no, str(exc)) from exc
            if record.id in records:
                raise CorpusFormatError(path, line_no, f"duplicate record id {record.id}")
            records[record.id] = record
    return Catalog(records=records, config=config, path=path)


def save_corpus(catalog: Catalog, path: str | Path) -> None:
    """Write the catalog as JSON Lines, atomically.

    The file is written to a temporary sibling and renamed into place,
    so the corpus file is never left half-written.
    """
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(
        dir=path.parent or Path("."), prefix=path.name, suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            for rid in sorted(catalog.records):
                fields = record_to_fields(catalog.records[rid])
                fh.write(json.dumps(fields, ensure_ascii=False) + "\n")
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
