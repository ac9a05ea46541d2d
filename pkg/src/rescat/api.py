"""HTTP/JSON API over the catalog: search, record detail, submission,
admin (publish/reindex) and stats.

All bodies are application/json.  Errors share one shape:
``{"code": <machine string>, "message": <human string>}`` with the
matching HTTP status.  Admin routes check the shared token from the
configuration (header ``X-Admin-Token``) when one is set.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .catalog import Catalog
from .errors import (
    AlreadyPublishedError,
    EmptyQueryError,
    NotFoundError,
    ValidationFailedError,
)
from .query import ResultPage, render_score
from .records import record_to_fields
from .stats import compute_stats, stats_to_dict

__all__ = ["create_app", "DEFAULT_PER_PAGE"]

DEFAULT_PER_PAGE = 10
MAX_PER_PAGE = 100


class ApiError(Exception):
    """Carries the wire shape of an API error."""

    def __init__(self, status: int, code: str, message: str, **extra):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.extra = extra

    def response(self) -> JSONResponse:
        body = {"code": self.code, "message": self.message}
        body.update(self.extra)
        return JSONResponse(status_code=self.status, content=body)


def _parse_int(raw: Optional[str], name: str, default: int, low: int, high: Optional[int]) -> int:
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ApiError(400, "bad_request", f"{name} must be an integer") from None
    if value < low or (high is not None and value > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise ApiError(400, "bad_request", f"{name} must be in {bound}")
    return value


def page_payload(result: ResultPage) -> dict:
    return {
        "total_hits": result.total_hits,
        "page": result.page,
        "per_page": result.per_page,
        "hits": [
            {
                "id": hit.record_id,
                "name": hit.name,
                "matching_score": render_score(hit.matching_score),
                "matching_score_raw": hit.matching_score,
                "application": hit.application,
                "first_category": hit.first_category,
                "second_categories": list(hit.second_categories),
                "availability": hit.availability,
                "accessibility": hit.accessibility,
                "scholar_citations": hit.scholar_citations,
                "abstract_snippet": hit.abstract_snippet,
                "features_snippet": hit.features_snippet,
            }
            for hit in result.hits
        ],
    }


def create_app(
    catalog: Catalog,
    admin_token: Optional[str] = None,
    ui_dir: Optional[str | Path] = None,
) -> FastAPI:
    """Build the FastAPI application bound to one catalog.

    Mutating handlers funnel through the catalog's writer lock and
    persist the corpus when the catalog has a bound path; searches are
    served from whatever snapshot is active when the request starts.
    """
    app = FastAPI(title="rescat", docs_url=None, redoc_url=None)

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return exc.response()

    def check_admin(request: Request) -> None:
        if admin_token and request.headers.get("X-Admin-Token") != admin_token:
            raise ApiError(401, "unauthorized", "missing or invalid admin token")

    def persist() -> None:
        if catalog.path is not None:
            catalog.save()

    @app.get("/api/search")
    def api_search(request: Request):
        params = request.query_params
        q = params.get("q")
        if q is None:
            raise ApiError(400, "empty_query", "missing query parameter q")
        page = _parse_int(params.get("page"), "page", 1, 1, None)
        per_page = _parse_int(params.get("per_page"), "per_page", DEFAULT_PER_PAGE, 1, MAX_PER_PAGE)
        try:
            result = catalog.search(q, page=page, per_page=per_page)
        except EmptyQueryError as exc:
            raise ApiError(400, "empty_query", str(exc)) from exc
        return page_payload(result)

    @app.get("/api/records/{rid}")
    def api_record(rid: str):
        try:
            record_id = int(rid)
        except ValueError:
            raise ApiError(400, "bad_request", "record id must be an integer") from None
        try:
            record = catalog.get(record_id)
        except NotFoundError as exc:
            raise ApiError(404, "not_found", str(exc)) from exc
        return record_to_fields(record)

    @app.post("/api/records", status_code=201)
    async def api_submit(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "bad_request", "body must be a JSON object") from None
        if not isinstance(body, dict):
            raise ApiError(400, "bad_request", "body must be a JSON object")
        try:
            rid = catalog.submit(body)
        except ValidationFailedError as exc:
            raise ApiError(
                422,
                "validation_failed",
                "record validation failed",
                violations=[
                    {"field": v.field, "rule": v.rule, "message": v.message}
                    for v in exc.violations
                ],
            ) from exc
        persist()
        return {"id": rid, "status": "Pending"}

    @app.post("/api/admin/publish/{rid}")
    def api_publish(rid: str, request: Request):
        check_admin(request)
        try:
            record_id = int(rid)
        except ValueError:
            raise ApiError(400, "bad_request", "record id must be an integer") from None
        try:
            record = catalog.publish(record_id)
        except NotFoundError as exc:
            raise ApiError(404, "not_found", str(exc)) from exc
        except AlreadyPublishedError as exc:
            raise ApiError(409, "already_published", str(exc)) from exc
        persist()
        return record_to_fields(record)

    @app.post("/api/admin/reindex")
    def api_reindex(request: Request):
        check_admin(request)
        snapshot, report = catalog.reindex()
        if not report.ok:
            raise ApiError(
                500,
                "bad_request",
                f"index consistency check failed: missing ids {list(report.missing_ids)}",
            )
        return {"build_id": snapshot.build_id, "D": snapshot.corpus_size}

    @app.get("/api/stats")
    def api_stats():
        return stats_to_dict(compute_stats(catalog.published_records()))

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
