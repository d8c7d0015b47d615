"""HTTP facade for the professor UI: rubric CRUD, metrics upload, evaluation.

Persistence is a single JSON file mapping rubric ids to stored documents;
writes are serialized behind a lock and PUT must carry the current
revision (optimistic concurrency, 409 on mismatch).
"""

from __future__ import annotations

import io
import json
import shutil
import tempfile
import threading
import zipfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .cli import result_to_dict
from .errors import ConfigError, NoRuleFiredError
from .metrics import compute_metrics, extract_classes, scan_tree
from .normalize import score_criterion
from .rubric import ProjectScores, evaluate_project, load_reference_rubric, parse_rubric

MAX_ARCHIVE_BYTES = 20 * 1024 * 1024
REFERENCE_ID = "reference"


class RubricStore:
    """One-file JSON store; last-writer-wins within a revision check."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.lock = threading.Lock()
        if not self.path.exists():
            self._write({})

    def _read(self) -> dict:
        return json.loads(self.path.read_text(encoding="utf-8"))

    def _write(self, data: dict):
        self.path.write_text(json.dumps(data, indent=2, sort_keys=True), encoding="utf-8")

    def get(self, rubric_id: str) -> Optional[dict]:
        with self.lock:
            return self._read().get(rubric_id)

    def list_ids(self) -> list[str]:
        with self.lock:
            return sorted(self._read())

    def create(self, rubric_id: str, document: dict) -> Optional[dict]:
        now = datetime.now(timezone.utc).isoformat()
        with self.lock:
            data = self._read()
            if rubric_id in data:
                return None
            entry = {
                "rubric_id": rubric_id,
                "document": document,
                "created": now,
                "modified": now,
                "revision": 1,
            }
            data[rubric_id] = entry
            self._write(data)
            return entry

    def update(self, rubric_id: str, document: dict, revision: int):
        """Returns (entry, error) where error is 'missing' or 'conflict'."""
        now = datetime.now(timezone.utc).isoformat()
        with self.lock:
            data = self._read()
            entry = data.get(rubric_id)
            if entry is None:
                return None, "missing"
            if entry["revision"] != revision:
                return None, "conflict"
            entry = {
                **entry,
                "document": document,
                "modified": now,
                "revision": entry["revision"] + 1,
            }
            data[rubric_id] = entry
            self._write(data)
            return entry, None


class EvaluationRequest(BaseModel):
    rubric_id: str
    scores: Optional[dict[str, float]] = None
    archive_b64: Optional[str] = None
    resolution: int = 1001
    # free-form course/student form data, echoed into the report unvalidated
    info: Optional[dict[str, Any]] = None


class RubricBody(BaseModel):
    rubric_id: Optional[str] = None
    document: dict
    revision: Optional[int] = None


class PlagiarismClient:
    """Stub for the external anti-plagiarism service."""

    def check(self, archive: bytes) -> dict:
        return {"status": "not configured"}


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": message, **extra})


def create_app(store_path: str | Path = "rubrics.json") -> FastAPI:
    app = FastAPI(title="projeval")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = RubricStore(Path(store_path))
    app.state.store = store
    app.state.plagiarism = PlagiarismClient()

    def load_config(rubric_id: str):
        if rubric_id == REFERENCE_ID:
            return load_reference_rubric()
        entry = store.get(rubric_id)
        if entry is None:
            return None
        return parse_rubric(entry["document"])

    def metrics_from_archive(payload: bytes) -> dict:
        workdir = tempfile.mkdtemp(prefix="projeval-")
        try:
            with zipfile.ZipFile(io.BytesIO(payload)) as archive:
                for info in archive.infolist():
                    target = Path(workdir) / info.filename
                    if not str(target.resolve()).startswith(str(Path(workdir).resolve())):
                        raise zipfile.BadZipFile("archive escapes extraction root")
                archive.extractall(workdir)
            result = scan_tree(workdir)
            classes, warnings = extract_classes(result.units)
            report = compute_metrics(result.units, classes)
            doc = {"metrics_version": 1, **report.as_dict()}
            if result.warnings or warnings:
                doc["warnings"] = result.warnings + warnings
            return doc
        finally:
            shutil.rmtree(workdir, ignore_errors=True)

    @app.post("/evaluate")
    def evaluate(body: EvaluationRequest):
        if (body.scores is None) == (body.archive_b64 is None):
            return _error(422, "provide exactly one of scores or archive_b64")
        config = load_config(body.rubric_id)
        if config is None:
            return _error(404, f"unknown rubric {body.rubric_id!r}")

        if body.scores is not None:
            expected = {c.name for c in config.criteria}
            if set(body.scores) != expected:
                return _error(422, f"scores must have keys {sorted(expected)}")
            if any(not 0 <= v <= 100 for v in body.scores.values()):
                return _error(422, "scores must lie in [0, 100]")
            scores = ProjectScores(**body.scores)
            criterion_scores = dict(body.scores)
            warnings: list[str] = []
        else:
            import base64

            try:
                payload = base64.b64decode(body.archive_b64, validate=True)
            except Exception:
                return _error(400, "archive_b64 is not valid base64")
            if len(payload) > MAX_ARCHIVE_BYTES:
                return _error(413, "archive too large")
            try:
                doc = metrics_from_archive(payload)
            except zipfile.BadZipFile:
                return _error(400, "corrupt archive")
            report_fields = {k: v for k, v in doc.items() if k not in ("metrics_version", "warnings")}
            report = _ReportView(report_fields)
            criterion_scores = {
                c.name: score_criterion(report, config.profile_for(c.name))
                for c in config.criteria
            }
            scores = ProjectScores(**criterion_scores)
            warnings = doc.get("warnings", [])

        try:
            result = evaluate_project(scores, list(config.criteria), config.rule_base, body.resolution)
        except NoRuleFiredError as exc:
            return _error(422, str(exc), criterion_scores=criterion_scores)
        entry = store.get(body.rubric_id)
        revision = entry["revision"] if entry else 1
        doc = result_to_dict(result, criterion_scores=criterion_scores, warnings=warnings)
        doc["rubric_revision"] = revision
        if body.info is not None:
            doc["info"] = body.info
        return doc

    @app.post("/metrics")
    async def metrics(request: Request):
        payload = await request.body()
        if len(payload) > MAX_ARCHIVE_BYTES:
            return _error(413, "archive too large")
        try:
            return metrics_from_archive(payload)
        except zipfile.BadZipFile:
            return _error(400, "corrupt archive")

    @app.get("/rubrics")
    def list_rubrics():
        return {"rubric_ids": [REFERENCE_ID] + store.list_ids()}

    @app.get("/rubrics/{rubric_id}")
    def get_rubric(rubric_id: str):
        if rubric_id == REFERENCE_ID:
            return {
                "rubric_id": REFERENCE_ID,
                "document": load_reference_rubric().document,
                "revision": 1,
            }
        entry = store.get(rubric_id)
        if entry is None:
            return _error(404, f"unknown rubric {rubric_id!r}")
        return entry

    @app.post("/rubrics", status_code=201)
    def create_rubric(body: RubricBody):
        error = _validate_document(body.document)
        if error is not None:
            return error
        rubric_id = body.rubric_id or f"rubric-{len(store.list_ids()) + 1}"
        if rubric_id == REFERENCE_ID:
            return _error(422, "the reference rubric is read-only")
        entry = store.create(rubric_id, body.document)
        if entry is None:
            return _error(409, f"rubric {rubric_id!r} already exists")
        return entry

    @app.put("/rubrics/{rubric_id}")
    def put_rubric(rubric_id: str, body: RubricBody):
        if rubric_id == REFERENCE_ID:
            return _error(422, "the reference rubric is read-only")
        error = _validate_document(body.document)
        if error is not None:
            return error
        if body.revision is None:
            return _error(409, "PUT must carry the current revision")
        entry, failure = store.update(rubric_id, body.document, body.revision)
        if failure == "missing":
            return _error(404, f"unknown rubric {rubric_id!r}")
        if failure == "conflict":
            return _error(409, "revision conflict")
        return entry

    return app


class _ReportView:
    """Attribute access over a plain metrics dict, for score_criterion."""

    def __init__(self, values: dict[str, Any]):
        self.__dict__.update(values)


def _validate_document(document: dict):
    try:
        parse_rubric(document)
    except ConfigError as exc:
        return _error(422, str(exc))
    return None
