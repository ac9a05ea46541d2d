"""Operator configuration: corpus path, boosts, stop list, admin token.

The config file is flat ``key = value`` pairs (TOML-style scalars, '#'
comments).  Field boosts use dotted keys: ``boost.name = 3.0``.
Command-line flags override file values.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional

from .errors import ConfigurationError
from .indexing import DEFAULT_FIELD_BOOSTS, IndexConfig

__all__ = ["AppSettings", "parse_config_file"]

DEFAULT_ADDR = "127.0.0.1:8080"


@dataclass
class AppSettings:
    corpus_path: Optional[str] = None
    stoplist_path: Optional[str] = None
    admin_token: Optional[str] = None
    addr: str = DEFAULT_ADDR
    field_boosts: dict[str, float] = dc_field(default_factory=lambda: dict(DEFAULT_FIELD_BOOSTS))

    def index_config(self) -> IndexConfig:
        return IndexConfig(
            field_boosts=dict(self.field_boosts),
            stoplist_path=self.stoplist_path,
        )


def _parse_scalar(text: str):
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
        return text[1:-1]
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    return text


def parse_config_file(path: str | Path) -> AppSettings:
    """Read key=value settings; unknown keys are rejected."""
    settings = AppSettings()
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}: line {line_no}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        parsed = _parse_scalar(value)
        if key == "corpus":
            settings.corpus_path = str(parsed)
        elif key == "stoplist":
            settings.stoplist_path = str(parsed)
        elif key == "admin_token":
            settings.admin_token = str(parsed)
        elif key == "addr":
            settings.addr = str(parsed)
        elif key.startswith("boost."):
            fld = key[len("boost."):]
            try:
                settings.field_boosts[fld] = float(parsed)
            except (TypeError, ValueError):
                raise ConfigurationError(
                    f"{path}: line {line_no}: boost must be a number"
                ) from None
        else:
            raise ConfigurationError(f"{path}: line {line_no}: unknown key {key!r}")
    return settings
