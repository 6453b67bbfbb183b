"""HTTP JSON service exposing reward scoring and judging.

Endpoints:

* ``POST /v1/reward``        one ScoreRequest -> ScoreResponse
* ``POST /v1/reward/batch``  positionally aligned batch; per-item errors
  in-band; 413 over the batch limit
* ``POST /v1/judge``         text -> verdict summary
* ``GET  /v1/health``        artifact fingerprints + config echo

Models load once at startup and never mutate, so identical requests get
identical responses.  Floats are serialized with 12 significant digits so
clients in any language can compare values for equality.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import RewardEngine
from .errors import StylemeterError, UnknownLevelError, UnknownStyleError
from .metrics import h_re
from .text import tokenize

DEFAULT_BATCH_LIMIT = 256


class ScoreRequest(BaseModel):
    source: str
    generated: str
    target_level: int
    style: str


class BatchScoreRequest(BaseModel):
    requests: list[ScoreRequest]


class JudgeRequest(BaseModel):
    text: str
    style: str | None = None


def round12(value: float) -> float:
    """Round to 12 significant digits (the service's serialization contract)."""
    return float(f"{value:.12g}")


def _round_tree(payload):
    if isinstance(payload, float):
        return round12(payload)
    if isinstance(payload, list):
        return [_round_tree(x) for x in payload]
    if isinstance(payload, dict):
        return {k: _round_tree(v) for k, v in payload.items()}
    return payload


def create_app(engine: RewardEngine | None, *, config_echo: dict | None = None,
               fingerprints: dict | None = None,
               batch_limit: int = DEFAULT_BATCH_LIMIT) -> FastAPI:
    app = FastAPI(title="stylemeter reward service")

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request"})

    class _NotLoaded(Exception):
        pass

    @app.exception_handler(_NotLoaded)
    async def not_loaded(request: Request, exc: _NotLoaded):
        return JSONResponse(status_code=503, content={"error": "models not loaded"})

    def require_engine() -> RewardEngine:
        if engine is None:
            raise _NotLoaded()
        return engine

    def score_one(item: ScoreRequest) -> dict:
        eng = require_engine()
        if item.style not in ("readability", "sentiment"):
            raise UnknownStyleError(f"unknown style {item.style!r}")
        if item.style != eng.style:
            raise UnknownStyleError(
                f"service is configured for {eng.style!r}, not {item.style!r}"
            )
        eng.scale.level(item.target_level)
        breakdown = eng.breakdown(item.source, item.generated, item.target_level)
        quality = h_re(
            tokenize(item.generated), item.target_level,
            model=eng.pivots, judge=eng.judge, cfg=eng.config,
        )
        verdict = eng.judge_text(item.generated)
        return _round_tree(
            {**breakdown.to_dict(), "h_re": quality, "judge": verdict.summary()}
        )

    @app.post("/v1/reward")
    def reward(item: ScoreRequest):
        try:
            return JSONResponse(score_one(item))
        except (UnknownLevelError, UnknownStyleError) as exc:
            return JSONResponse(status_code=422, content={"error": str(exc)})
        except StylemeterError as exc:
            return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.post("/v1/reward/batch")
    def reward_batch(batch: BatchScoreRequest):
        require_engine()
        if len(batch.requests) > batch_limit:
            return JSONResponse(
                status_code=413,
                content={"error": f"batch exceeds limit of {batch_limit}"},
            )
        responses = []
        for item in batch.requests:
            try:
                responses.append(score_one(item))
            except StylemeterError as exc:
                responses.append({"error": str(exc)})
        return JSONResponse({"responses": responses})

    @app.post("/v1/judge")
    def judge(item: JudgeRequest):
        eng = require_engine()
        if item.style is not None and item.style != eng.style:
            return JSONResponse(
                status_code=422,
                content={"error": f"service is configured for {eng.style!r}"},
            )
        try:
            verdict = eng.judge_text(item.text)
        except StylemeterError as exc:
            return JSONResponse(status_code=422, content={"error": str(exc)})
        return JSONResponse(_round_tree(verdict.summary()))

    @app.get("/v1/health")
    def health():
        if engine is None:
            return JSONResponse(status_code=503, content={"error": "models not loaded"})
        return JSONResponse(
            {
                "status": "ok",
                "style": engine.style,
                "mode": engine.config.mode,
                "levels": list(engine.scale.indices),
                "fingerprints": fingerprints or {},
                "config": _round_tree(config_echo or {}),
            }
        )

    return app


def serve(engine: RewardEngine, bind: str = "127.0.0.1:8080", *,
          config_echo: dict | None = None, fingerprints: dict | None = None) -> None:
    """Run the service until interrupted."""
    import uvicorn

    host, _, port = bind.partition(":")
    app = create_app(engine, config_echo=config_echo, fingerprints=fingerprints)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8080), log_level="warning")
