"""HTTP facade for the checker and suggester (JSON over UTF-8).

Endpoints:
    POST /api/check    {"text": ...} → {"normalized_text", "tokens": [...]}
    GET  /api/suggest  ?word=...&max_distance=&max_results=&merge_policy=
    GET  /api/health

Requests never mutate server state; handlers read the engine reference
once per request, so an admin reload can swap ``app.state.engine``
atomically between requests. Token offsets index into the returned
``normalized_text`` (normalization happens server-side).
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .engine import SpellEngine
from .suggest import MERGE_POLICIES, SuggestParams

DEFAULT_MAX_TEXT_BYTES = 1 << 20


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def create_app(
    engine: SpellEngine | None,
    *,
    cors_origins: tuple[str, ...] = (),
    max_text_bytes: int = DEFAULT_MAX_TEXT_BYTES,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="sindhispell", docs_url=None, redoc_url=None)
    app.state.engine = engine

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.post("/api/check")
    async def api_check(request: Request):
        eng: SpellEngine | None = request.app.state.engine
        if eng is None:
            return _error(503, "lexicon index not loaded")
        body = await request.body()
        if len(body) > max_text_bytes:
            return _error(413, f"text exceeds {max_text_bytes} bytes")
        try:
            payload = json.loads(body)
        except (UnicodeDecodeError, json.JSONDecodeError):
            return _error(400, "body must be valid JSON")
        if not isinstance(payload, dict) or not isinstance(payload.get("text"), str):
            return _error(400, 'body must be an object with a string "text" field')
        rep = eng.check(payload["text"])
        return JSONResponse(
            {
                "normalized_text": rep.text,
                "tokens": [
                    {
                        "surface": ft.token.surface,
                        "start": ft.token.start,
                        "end": ft.token.end,
                        "misspelled": ft.misspelled,
                    }
                    for ft in rep.tokens
                ],
            }
        )

    @app.get("/api/suggest")
    async def api_suggest(request: Request):
        eng: SpellEngine | None = request.app.state.engine
        if eng is None:
            return _error(503, "lexicon index not loaded")
        q = request.query_params
        word = eng.normalize(q.get("word", ""))
        if not word:
            return _error(400, "word must be non-empty after normalization")
        kwargs = {}
        for name in ("max_distance", "max_results"):
            raw = q.get(name)
            if raw is not None:
                try:
                    kwargs[name] = int(raw)
                except ValueError:
                    return _error(400, f"{name} must be an integer")
        policy = q.get("merge_policy")
        if policy is not None:
            kwargs["merge_policy"] = policy
        try:
            params = SuggestParams(**kwargs)
        except ValueError as exc:
            return _error(400, str(exc))
        suggestions = eng.suggest(word, params)
        return JSONResponse(
            {"suggestions": [s.to_dict() for s in suggestions]}
        )

    @app.get("/api/health")
    async def api_health(request: Request):
        eng: SpellEngine | None = request.app.state.engine
        if eng is None:
            return _error(503, "lexicon index not loaded")
        return JSONResponse(
            {
                "status": "ok",
                "lexicon_words": len(eng.lexicon),
                "table_checksums": {
                    "sound": eng.sound_table.checksum(),
                    "shape": eng.shape_table.checksum(),
                },
            }
        )

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


__all__ = ["create_app", "DEFAULT_MAX_TEXT_BYTES", "MERGE_POLICIES"]
