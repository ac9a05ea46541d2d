"""Exception types shared across the package."""

from __future__ import annotations


class RescatError(Exception):
    """Base class for all package errors."""


class ConfigurationError(RescatError):
    """A config value is unusable (unknown field name, bad boost, ...)."""


class EmptyQueryError(RescatError):
    """The query contains no indexable terms after normalization."""

    def __init__(self, raw: str):
        super().__init__("query contains no indexable terms")
        self.raw = raw


class NotFoundError(RescatError):
    """No record with the requested id exists."""

    def __init__(self, record_id):
        super().__init__(f"no record with id {record_id!r}")
        self.record_id = record_id


class AlreadyPublishedError(RescatError):
    """publish() was called on a record that is already Published."""

    def __init__(self, record_id: int):
        super().__init__(f"record {record_id} is already published")
        self.record_id = record_id


class ValidationFailedError(RescatError):
    """A candidate record was rejected; carries the violation list."""

    def __init__(self, violations):
        lines = "; ".join(f"{v.field}: {v.message}" for v in violations)
        super().__init__(f"record validation failed: {lines}")
        self.violations = list(violations)


class CorpusFormatError(RescatError):
    """A corpus file line could not be parsed; names the offending line."""

    def __init__(self, path, line_no: int, reason: str):
        super().__init__(f"{path}: line {line_no}: {reason}")
        self.path = path
        self.line_no = line_no
        self.reason = reason


class IndexBuildError(RescatError):
    """The index build was aborted (e.g. duplicate document ids)."""
