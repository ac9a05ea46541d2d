"""Operator command line: ingest, submit, publish, reindex, search,
stats, serve.

Exit codes: 0 success, 1 user error (bad input, missing files, failed
validation), 2 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Optional

from .catalog import Catalog, load_corpus
from .errors import (
    AlreadyPublishedError,
    ConfigurationError,
    CorpusFormatError,
    EmptyQueryError,
    NotFoundError,
    RescatError,
    ValidationFailedError,
)
from .figures import write_report_files
from .query import render_score
from .records import Status
from .settings import AppSettings, parse_config_file
from .stats import REPORT_FACETS, compute_stats, render_stats, stats_to_dict

__all__ = ["main", "build_parser"]


class UserError(RescatError):
    """Operator mistake; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract reserves 2 for
    # internal failures, so usage problems are downgraded to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a key=value settings file")
    common.add_argument("--corpus", help="corpus file (JSON Lines); overrides the config file")
    common.add_argument("--stoplist", help="stop list file; overrides the config file")

    parser = _Parser(prog="rescat", description="catalog and search tool for research resources")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("ingest", parents=[common], help="load and validate a corpus file")
    p.add_argument("path", help="corpus file to read")

    p = sub.add_parser("submit", parents=[common], help="add one record from a JSON file")
    p.add_argument("path", help="JSON file holding a single record object")

    p = sub.add_parser("publish", parents=[common], help="mark records as published")
    p.add_argument("id", nargs="?", type=int, help="record id to publish")
    p.add_argument("--all", action="store_true", help="publish every pending record")

    sub.add_parser("reindex", parents=[common], help="rebuild the search index and report its size")

    p = sub.add_parser("search", parents=[common], help="run a query against the published records")
    p.add_argument("query", help="free-text query")
    p.add_argument("--top-k", type=int, default=10, help="hits per page (default 10)")
    p.add_argument("--page", type=int, default=1, help="result page, 1-based")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("stats", parents=[common], help="summarize the published records")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--figures", metavar="DIR", help="also write bar charts and facets.csv to DIR")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP API")
    p.add_argument("--addr", help="listen address as HOST:PORT")
    p.add_argument("--ui", metavar="DIR", help="serve a static frontend from DIR at /")

    return parser


def load_settings(args: argparse.Namespace) -> AppSettings:
    settings = parse_config_file(args.config) if args.config else AppSettings()
    if getattr(args, "corpus", None):
        settings.corpus_path = args.corpus
    if getattr(args, "stoplist", None):
        settings.stoplist_path = args.stoplist
    if getattr(args, "addr", None):
        settings.addr = args.addr
    return settings


def open_catalog(settings: AppSettings, must_exist: bool) -> Catalog:
    if settings.corpus_path is None:
        raise UserError("no corpus configured (use --corpus or a config file)")
    path = Path(settings.corpus_path)
    if path.exists():
        return load_corpus(path, settings.index_config())
    if must_exist:
        raise UserError(f"corpus file not found: {path}")
    return Catalog(config=settings.index_config(), path=path)


def cmd_ingest(args, out) -> int:
    settings = load_settings(args)
    catalog = load_corpus(args.path, settings.index_config())
    destination = Path(settings.corpus_path) if settings.corpus_path else Path(args.path)
    if destination.resolve() != Path(args.path).resolve():
        catalog.save(destination)
    print(f"ingested {len(catalog.records)} records (corpus: {destination})", file=out)
    return 0


def cmd_submit(args, out) -> int:
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=False)
    try:
        body = json.loads(Path(args.path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UserError(f"{args.path}: not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise UserError(f"{args.path}: expected a JSON object")
    rid = catalog.submit(body)
    catalog.save()
    print(f"submitted record {rid} (status: Pending)", file=out)
    return 0


def cmd_publish(args, out) -> int:
    if args.all == (args.id is not None):
        raise UserError("give exactly one of a record id or --all")
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=True)
    if args.all:
        pending = sorted(
            rid for rid, rec in catalog.records.items() if rec.status is Status.PENDING
        )
        for rid in pending:
            catalog.publish(rid)
        catalog.save()
        print(f"published {len(pending)} records", file=out)
    else:
        catalog.publish(args.id)
        catalog.save()
        print(f"published record {args.id}", file=out)
    return 0


def cmd_reindex(args, out) -> int:
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=True)
    snapshot, report = catalog.reindex()
    if not report.ok:
        print(f"index check failed: missing ids {list(report.missing_ids)}", file=sys.stderr)
        return 2
    print(f"build {snapshot.build_id}: indexed {snapshot.corpus_size} documents", file=out)
    return 0


def cmd_search(args, out) -> int:
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=True)
    catalog.reindex()
    try:
        result = catalog.search(args.query, page=args.page, per_page=args.top_k)
    except ValueError as exc:
        raise UserError(str(exc)) from exc
    if args.format == "json":
        from .api import page_payload

        print(json.dumps(page_payload(result), ensure_ascii=False, indent=2), file=out)
        return 0
    first = (result.page - 1) * result.per_page
    for offset, hit in enumerate(result.hits, 1):
        line = f"{first + offset}. {render_score(hit.matching_score)} {hit.name}"
        if hit.application:
            line += f" — {hit.application}"
        print(line, file=out)
    return 0


def cmd_stats(args, out) -> int:
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=True)
    stats = compute_stats(catalog.published_records())
    if args.format == "json":
        print(json.dumps(stats_to_dict(stats), ensure_ascii=False, indent=2), file=out)
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["facet", "label", "count", "percent"])
        for title, attr in REPORT_FACETS:
            for row in getattr(stats, attr):
                writer.writerow([title, row.label, row.count, f"{row.percent:.2f}"])
    else:
        print(render_stats(stats), file=out)
    if args.figures:
        for path in write_report_files(stats, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_serve(args, out) -> int:
    settings = load_settings(args)
    catalog = open_catalog(settings, must_exist=True)
    catalog.reindex()

    from .api import create_app

    app = create_app(catalog, admin_token=settings.admin_token, ui_dir=args.ui)
    host, _, port_text = settings.addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise UserError(f"bad listen address {settings.addr!r}, expected HOST:PORT")

    import uvicorn

    uvicorn.run(app, host=host, port=int(port_text), log_level="info")
    return 0


_COMMANDS = {
    "ingest": cmd_ingest,
    "submit": cmd_submit,
    "publish": cmd_publish,
    "reindex": cmd_reindex,
    "search": cmd_search,
    "stats": cmd_stats,
    "serve": cmd_serve,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except EmptyQueryError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except ValidationFailedError as exc:
        print("validation failed:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation.field}: {violation.message}", file=sys.stderr)
        return 1
    except (
        UserError,
        ConfigurationError,
        CorpusFormatError,
        NotFoundError,
        AlreadyPublishedError,
    ) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive catch-all
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
