import shutil

import pytest

from rescat import Catalog, fixture_corpus_path, load_corpus
from rescat.records import DEFAULT_INDEXED_FIELDS, Record, record_to_document


@pytest.fixture(scope="session")
def fixture_path():
    path = fixture_corpus_path()
    assert path.exists(), f"bundled corpus missing: {path}"
    return path


@pytest.fixture()
def fixture_catalog(fixture_path) -> Catalog:
    """A fresh catalog loaded from the bundled 20-record corpus."""
    return load_corpus(fixture_path)


@pytest.fixture()
def published_catalog(fixture_path, tmp_path) -> Catalog:
    """Fixture corpus with every record published and indexed, bound to a
    throwaway copy of the corpus file so mutations never touch the bundle."""
    corpus = tmp_path / "corpus.jsonl"
    shutil.copy(fixture_path, corpus)
    catalog = load_corpus(corpus)
    for rid in sorted(catalog.records):
        catalog.publish(rid)
    catalog.reindex()
    return catalog


def record_field_texts(record: Record, fields=DEFAULT_INDEXED_FIELDS) -> dict[str, str]:
    """Raw per-field text of a record, for feeding the naive oracle."""
    doc = record_to_document(record, fields)
    return {fld: text for fld, text in doc.fields.items() if text}
