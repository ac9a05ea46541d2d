import json
import re
import threading
from datetime import datetime, timedelta

import pytest

from rescat import (
    Catalog,
    CheckReport,
    fixture_corpus_path,
    load_corpus,
    save_corpus,
)
from rescat.errors import (
    AlreadyPublishedError,
    CorpusFormatError,
    NotFoundError,
    ValidationFailedError,
)
from rescat.indexing import IndexConfig
from rescat.records import Status, record_to_fields

TIMESTAMP_SHAPE = re.compile(r"^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}\+00:00$")


def candidate(**overrides):
    """A fresh valid submission payload."""
    fields = {
        "name": "NovaTool",
        "first_category": "Software",
        "second_categories": ["Genomics"],
        "abstract": "Assembles xylofresh fragments into scaffolds.",
    }
    fields.update(overrides)
    return fields


def valid_line(record_id, name=None):
    return json.dumps(
        {
            "id": record_id,
            "name": name or f"tool {record_id}",
            "first_category": "Directory",
        }
    )


def write_corpus(tmp_path, lines, name="corpus.jsonl"):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestSubmit:
    def test_assigns_id_status_and_timestamp(self):
        catalog = Catalog()
        before = datetime.now().astimezone()
        rid = catalog.submit(candidate())
        assert rid == 1
        record = catalog.get(rid)
        assert record.status is Status.PENDING
        assert TIMESTAMP_SHAPE.match(record.timestamp)
        stamped = datetime.fromisoformat(record.timestamp)
        assert stamped.utcoffset() == timedelta(0)
        assert abs(stamped - before) < timedelta(minutes=1)

    def test_ids_are_sequential(self):
        catalog = Catalog()
        assert [catalog.submit(candidate()) for _ in range(3)] == [1, 2, 3]

    def test_continues_after_highest_loaded_id(self, fixture_catalog):
        assert fixture_catalog.submit(candidate()) == 21

    def test_supplied_id_status_timestamp_ignored(self):
        catalog = Catalog()
        rid = catalog.submit(
            candidate(
                id=999,
                status="Published",
                timestamp="1999-01-01T00:00:00+00:00",
            )
        )
        assert rid == 1
        record = catalog.get(rid)
        assert record.status is Status.PENDING
        assert not record.timestamp.startswith("1999")

    def test_garbage_in_assigned_fields_ignored(self):
        catalog = Catalog()
        rid = catalog.submit(candidate(id="not-a-number", status="Bogus", timestamp=7))
        assert catalog.get(rid).name == "NovaTool"

    def test_invalid_candidate_rejected_without_side_effects(self):
        catalog = Catalog()
        with pytest.raises(ValidationFailedError) as exc:
            catalog.submit(candidate(name=""))
        assert exc.value.violations
        assert catalog.records == {}
        assert catalog.submit(candidate()) == 1

    def test_submitted_record_is_not_published(self):
        catalog = Catalog()
        catalog.submit(candidate())
        assert catalog.published_records() == []


class TestPublish:
    def test_flips_status(self):
        catalog = Catalog()
        rid = catalog.submit(candidate())
        record = catalog.publish(rid)
        assert record.status is Status.PUBLISHED
        assert catalog.published_records() == [record]

    def test_unknown_id(self):
        with pytest.raises(NotFoundError, match="999"):
            Catalog().publish(999)

    def test_second_publish_rejected(self):
        catalog = Catalog()
        rid = catalog.submit(candidate())
        catalog.publish(rid)
        with pytest.raises(AlreadyPublishedError) as exc:
            catalog.publish(rid)
        assert str(exc.value) == f"record {rid} is already published"


class TestGet:
    def test_returns_pending_records_too(self, fixture_catalog):
        record = fixture_catalog.get(1)
        assert record.name == "SurvNet"
        assert record.status is Status.PENDING
        assert record.web_link == "https://tools.example.org/survnet"
        assert record.tutorial_link == "https://tools.example.org/survnet/tutorial"
        assert record.article_link == "https://articles.example.org/nar/survnet"

    def test_unknown_id(self, fixture_catalog):
        with pytest.raises(NotFoundError):
            fixture_catalog.get(999999)


class TestReindex:
    def test_initial_snapshot_is_empty(self):
        catalog = Catalog()
        assert catalog.active_snapshot.corpus_size == 0
        assert catalog.active_snapshot.build_id == 0

    def test_counts_only_published_records(self, fixture_catalog):
        for rid in range(1, 6):
            fixture_catalog.publish(rid)
        snapshot, report = fixture_catalog.reindex()
        assert snapshot.corpus_size == 5
        assert set(snapshot.docs) == {1, 2, 3, 4, 5}
        assert report == CheckReport(expected_docs=5, indexed_docs=5, missing_ids=())
        assert report.ok

    def test_zero_published_records(self, fixture_catalog):
        snapshot, report = fixture_catalog.reindex()
        assert snapshot.corpus_size == 0
        assert report.ok
        assert fixture_catalog.search("rna").total_hits == 0

    def test_build_id_increments(self, fixture_catalog):
        ids = [fixture_catalog.reindex()[0].build_id for _ in range(3)]
        assert ids == [1, 2, 3]
        assert fixture_catalog.active_snapshot.build_id == 3

    def test_old_snapshot_untouched_by_later_builds(self):
        catalog = Catalog()
        first = catalog.submit(candidate())
        catalog.publish(first)
        snap1, _ = catalog.reindex()
        second = catalog.submit(candidate(name="OtherTool"))
        catalog.publish(second)
        snap2, _ = catalog.reindex()
        assert snap1.corpus_size == 1
        assert snap2.corpus_size == 2
        assert catalog.active_snapshot is snap2

    def test_check_report_failure_shapes(self):
        assert not CheckReport(expected_docs=2, indexed_docs=1, missing_ids=(7,)).ok
        assert not CheckReport(expected_docs=3, indexed_docs=2, missing_ids=()).ok
        assert CheckReport(expected_docs=0, indexed_docs=0, missing_ids=()).ok


class TestSearchVisibility:
    def test_record_searchable_only_after_publish_and_reindex(self):
        catalog = Catalog()
        rid = catalog.submit(candidate())
        assert catalog.search("xylofresh").total_hits == 0
        catalog.publish(rid)
        assert catalog.search("xylofresh").total_hits == 0
        catalog.reindex()
        result = catalog.search("xylofresh")
        assert [h.record_id for h in result.hits] == [rid]

    def test_pending_records_never_surface(self, fixture_catalog):
        for rid in range(1, 6):
            fixture_catalog.publish(rid)
        fixture_catalog.reindex()
        assert fixture_catalog.search("bioinformatics").total_hits == 5
        for name, rid in [("survnet", 1), ("lncrnadb", 2), ("rnalogo", 4), ("ymdb", 5)]:
            hits = fixture_catalog.search(name).hits
            assert rid in [h.record_id for h in hits]
        assert fixture_catalog.search("pegasys").total_hits == 0


class TestLoadCorpus:
    def test_bundled_corpus(self, fixture_catalog):
        assert sorted(fixture_catalog.records) == list(range(1, 21))
        assert all(
            r.status is Status.PENDING for r in fixture_catalog.records.values()
        )
        assert fixture_catalog.path == fixture_corpus_path()

    def test_blank_lines_skipped(self, tmp_path):
        path = write_corpus(tmp_path, [valid_line(1), "", "   ", valid_line(2)])
        catalog = load_corpus(path)
        assert sorted(catalog.records) == [1, 2]

    def test_invalid_json_names_physical_line(self, tmp_path):
        lines = [valid_line(i) for i in range(1, 7)] + ["{oops"]
        path = write_corpus(tmp_path, lines)
        with pytest.raises(CorpusFormatError) as exc:
            load_corpus(path)
        assert exc.value.line_no == 7
        assert "line 7" in str(exc.value)
        assert "invalid JSON" in str(exc.value)

    def test_line_numbers_count_blank_lines(self, tmp_path):
        path = write_corpus(tmp_path, ["", valid_line(1), "", "not json"])
        with pytest.raises(CorpusFormatError) as exc:
            load_corpus(path)
        assert exc.value.line_no == 4

    def test_non_object_line(self, tmp_path):
        path = write_corpus(tmp_path, ["[1, 2, 3]"])
        with pytest.raises(CorpusFormatError, match="must be a JSON object"):
            load_corpus(path)

    def test_missing_id(self, tmp_path):
        path = write_corpus(
            tmp_path, [json.dumps({"name": "x", "first_category": "Directory"})]
        )
        with pytest.raises(CorpusFormatError, match="missing 'id'"):
            load_corpus(path)

    def test_duplicate_id(self, tmp_path):
        path = write_corpus(tmp_path, [valid_line(3), valid_line(3)])
        with pytest.raises(CorpusFormatError) as exc:
            load_corpus(path)
        assert exc.value.line_no == 2
        assert "duplicate record id 3" in str(exc.value)

    def test_validation_failure_reported_with_field(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [json.dumps({"id": 1, "name": "", "first_category": "Directory"})],
        )
        with pytest.raises(CorpusFormatError) as exc:
            load_corpus(path)
        assert "invalid record" in str(exc.value)
        assert "name" in str(exc.value)

    def test_config_carried_into_catalog(self, tmp_path):
        path = write_corpus(tmp_path, [valid_line(1)])
        config = IndexConfig(indexed_fields=("name",))
        catalog = load_corpus(path, config=config)
        assert catalog.config is config


class TestSaveCorpus:
    def test_round_trip_preserves_every_field(self, fixture_catalog, tmp_path):
        fixture_catalog.publish(3)
        fixture_catalog.submit(candidate())
        target = tmp_path / "saved.jsonl"
        assert fixture_catalog.save(target) == target
        loaded = load_corpus(target)
        assert sorted(loaded.records) == sorted(fixture_catalog.records)
        for rid, record in fixture_catalog.records.items():
            assert record_to_fields(loaded.records[rid]) == record_to_fields(record)
        assert loaded.get(3).status is Status.PUBLISHED
        assert loaded.submit(candidate()) == 22

    def test_unknown_keys_survive_the_round_trip(self, fixture_catalog, tmp_path):
        target = tmp_path / "saved.jsonl"
        fixture_catalog.save(target)
        raw = target.read_text(encoding="utf-8")
        assert '"legacy_id": "BIB-0020"' in raw
        assert record_to_fields(load_corpus(target).get(20))["legacy_id"] == "BIB-0020"

    def test_file_is_sorted_json_lines_without_escaping(self, fixture_catalog, tmp_path):
        target = tmp_path / "saved.jsonl"
        fixture_catalog.save(target)
        lines = target.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 20
        ids = [json.loads(line)["id"] for line in lines]
        assert ids == sorted(ids)
        assert "ΔG predictor" in "\n".join(lines)

    def test_save_replaces_and_leaves_no_temp_files(self, tmp_path):
        target = tmp_path / "c.jsonl"
        catalog = Catalog(path=target)
        catalog.submit(candidate())
        catalog.save()
        catalog.submit(candidate(name="SecondTool"))
        catalog.save()
        assert len(target.read_text(encoding="utf-8").splitlines()) == 2
        assert [p.name for p in tmp_path.iterdir()] == ["c.jsonl"]

    def test_save_without_a_path(self):
        with pytest.raises(ValueError, match="no corpus path"):
            Catalog().save()

    def test_save_corpus_function(self, tmp_path):
        catalog = Catalog()
        catalog.submit(candidate())
        target = tmp_path / "direct.jsonl"
        save_corpus(catalog, target)
        assert load_corpus(target).get(1).name == "NovaTool"


class TestConcurrency:
    def test_concurrent_submits_get_unique_ids(self):
        catalog = Catalog()
        ids = []
        lock = threading.Lock()

        def worker():
            for _ in range(25):
                rid = catalog.submit(candidate())
                with lock:
                    ids.append(rid)

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert sorted(ids) == list(range(1, 201))
        assert sorted(catalog.records) == list(range(1, 201))

    def test_search_never_sees_a_half_built_index(self):
        catalog = Catalog()
        rid = catalog.submit(candidate())
        catalog.publish(rid)
        catalog.reindex()
        stop = threading.Event()
        failures = []

        def reader():
            while not stop.is_set():
                total = catalog.search("xylofresh").total_hits
                if total != 1:
                    failures.append(total)

        def rebuilder():
            for _ in range(50):
                catalog.reindex()

        reader_thread = threading.Thread(target=reader)
        reader_thread.start()
        rebuild_thread = threading.Thread(target=rebuilder)
        rebuild_thread.start()
        rebuild_thread.join()
        stop.set()
        reader_thread.join()
        assert failures == []
