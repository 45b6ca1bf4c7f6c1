"""HTTP service: POST /simplify and GET /health."""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .gateway import ConfigError, EngineConfig, InputFormat, Pipeline
from .parsing import TransportError, UpstreamParseError
from .simplifier import DepthGuardExceeded
from .tree import PTBError

__all__ = ["create_app"]


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def create_app(config: EngineConfig | None = None, pipeline: Pipeline | None = None) -> FastAPI:
    """Build the app around one shared, read-only pipeline."""
    pipeline = pipeline or Pipeline(config or EngineConfig())
    app = FastAPI(title="discsplit", version="0.1.0")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/simplify")
    async def simplify(request: Request):
        try:
            body = json.loads(await request.body())
        except (ValueError, UnicodeDecodeError):
            return _error(400, "body must be a JSON object")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        keys = {"text", "ptb"} & set(body)
        if len(keys) != 1 or not isinstance(body[next(iter(keys))], str):
            return _error(400, "body needs exactly one string field: 'text' or 'ptb'")
        key = keys.pop()
        fmt = InputFormat.RAW if key == "text" else InputFormat.PTB
        try:
            doc = pipeline.document(body[key], fmt)
        except ConfigError as exc:
            return _error(400, str(exc))
        except PTBError as exc:
            return _error(400, f"invalid PTB input: {exc}")
        except (TransportError, UpstreamParseError) as exc:
            return _error(502, str(exc))
        except DepthGuardExceeded as exc:
            return _error(500, str(exc))
        return Response(doc, media_type="application/json")

    return app
