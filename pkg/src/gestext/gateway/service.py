"""HTTP gateway: prompt rendering, token relay, and the core session bridge.

Endpoints:
  POST /aiCompletionStream  - SSE stream of {requestId, delta, done} chunks
  POST /synonyms            - word -> up to five synonyms (or none)
  POST /rewrite             - sentence tone rewrite / custom instruction
  GET  /healthz             - liveness + mode

The session bridge exposes the headless core to a browser frontend as
serialized events in, serialized DisplayModels out:
  POST /session/start, POST /session/{sid}/event, GET /session/{sid}/state

Deltas are relayed in arrival order, unbuffered; a client disconnect or a
registry cancel stops the provider stream within one chunk.
"""

from __future__ import annotations

import asyncio
import json
import os
import uuid
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import StreamingResponse
from pydantic import BaseModel

from ..engine import DeviceProfile, TouchEvent
from ..fixtures import initial_text as fixture_text
from ..session import EditorSession, SessionConfig
from ..textmodel import Document, LayoutCfg
from .latency import LatencyModel
from .provider import MockProvider, OpenAICompatProvider, ProviderConfig
from .templates import (
    TEMPLATE_CUSTOM,
    TEMPLATE_REWRITE,
    TEMPLATE_SYNONYM,
    GenerationRequest,
    parse_synonyms,
)


class StreamBody(BaseModel):
    template: str
    variables: dict
    requestId: int
    maxSentences: int = 1


class SynonymBody(BaseModel):
    word: str


class RewriteBody(BaseModel):
    sentence: str
    type: Optional[str] = None
    prompt: Optional[str] = None


class SessionStartBody(BaseModel):
    taskId: Optional[str] = None
    initialText: Optional[str] = None
    variant: str = "bubbles"
    seed: int = 0
    profile: Optional[dict] = None
    layout: Optional[dict] = None


class SessionEventBody(BaseModel):
    event: dict


class StreamRegistry:
    """At most one live stream per request id; duplicates are rejected."""

    def __init__(self) -> None:
        self._cancels: dict[int, asyncio.Event] = {}

    def open(self, request_id: int) -> asyncio.Event:
        if request_id in self._cancels:
            raise KeyError(request_id)
        ev = asyncio.Event()
        self._cancels[request_id] = ev
        return ev

    def close(self, request_id: int) -> None:
        self._cancels.pop(request_id, None)

    def cancel(self, request_id: int) -> bool:
        ev = self._cancels.get(request_id)
        if ev is None:
            return False
        ev.set()
        return True


def _mock_enabled() -> bool:
    return os.environ.get("GESTEXT_MOCK", "1") not in ("0", "false", "")


def create_app(provider=None, *, mock: Optional[bool] = None,
               seed: Optional[int] = None,
               latency: Optional[LatencyModel] = None) -> FastAPI:
    if mock is None:
        mock = _mock_enabled()
    if seed is None:
        seed = int(os.environ.get("GESTEXT_LATENCY_SEED", "0"))
    if provider is None:
        if mock:
            provider = MockProvider(seed=seed, latency=latency)
        else:
            provider = OpenAICompatProvider(ProviderConfig.from_env())

    app = FastAPI(title="gestext gateway")
    app.state.provider = provider
    app.state.mock = mock
    app.state.registry = StreamRegistry()
    app.state.sessions = {}

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok", "mock": app.state.mock}

    @app.post("/aiCompletionStream")
    async def ai_completion_stream(body: StreamBody, request: Request):
        registry: StreamRegistry = app.state.registry
        try:
            cancel = registry.open(body.requestId)
        except KeyError:
            raise HTTPException(status_code=409,
                                detail=f"request {body.requestId} already active")

        req = GenerationRequest(request_id=body.requestId, template=body.template,
                                variables=body.variables,
                                max_sentences=body.maxSentences)

        async def relay():
            try:
                async for chunk in app.state.provider.astream(req):
                    if cancel.is_set() or await request.is_disconnected():
                        break
                    yield f"data: {json.dumps(chunk.to_json())}\n\n"
                    if chunk.done:
                        break
            except Exception as exc:  # provider failure: error chunk, then done
                payload = {"requestId": body.requestId, "delta": "",
                           "done": True, "error": str(exc)}
                yield f"data: {json.dumps(payload)}\n\n"
            finally:
                registry.close(body.requestId)

        return StreamingResponse(relay(), media_type="text/event-stream")

    @app.post("/synonyms")
    async def synonyms(body: SynonymBody):
        req = GenerationRequest(request_id=0, template=TEMPLATE_SYNONYM,
                                variables={"word": body.word})
        raw = await _complete(app.state.provider, req)
        words = parse_synonyms(raw)
        if words is None:
            return {"synonyms": None, "noSynonym": True}
        return {"synonyms": words, "noSynonym": False}

    @app.post("/rewrite")
    async def rewrite(body: RewriteBody):
        if body.prompt is not None:
            req = GenerationRequest(
                request_id=0, template=TEMPLATE_CUSTOM,
                variables={"sentence": body.sentence, "prompt": body.prompt})
        elif body.type is not None:
            req = GenerationRequest(
                request_id=0, template=TEMPLATE_REWRITE,
                variables={"sentence": body.sentence, "type": body.type})
        else:
            raise HTTPException(status_code=422, detail="need type or prompt")
        return {"sentence": await _complete(app.state.provider, req)}

    # -- session bridge (core <-> browser boundary) --------------------------

    @app.post("/session/start")
    async def session_start(body: SessionStartBody):
        if body.initialText is not None:
            text = body.initialText
        elif body.taskId is not None:
            try:
                text = fixture_text(body.taskId)
            except KeyError as exc:
                raise HTTPException(status_code=404, detail=str(exc))
        else:
            raise HTTPException(status_code=422, detail="need taskId or initialText")
        config = SessionConfig(
            layout=LayoutCfg(**body.layout) if body.layout else LayoutCfg(),
            profile=DeviceProfile(**body.profile) if body.profile else DeviceProfile(),
            variant=body.variant,
            seed=body.seed,
        )
        session = EditorSession(Document.from_text(text), config)
        sid = uuid.uuid4().hex
        app.state.sessions[sid] = session
        return {"sessionId": sid, "display": _display_json(session),
                "documentText": session.document.text}

    @app.post("/session/{sid}/event")
    async def session_event(sid: str, body: SessionEventBody):
        session = _session_of(app, sid)
        commands = _apply_event(session, body.event)
        return {
            "commands": [c.to_json() for c in commands],
            "display": _display_json(session),
            "documentText": session.document.text,
            "revision": session.document.revision,
        }

    @app.get("/session/{sid}/state")
    async def session_state(sid: str):
        session = _session_of(app, sid)
        return {"display": _display_json(session),
                "documentText": session.document.text,
                "revision": session.document.revision}

    return app


def _session_of(app: FastAPI, sid: str) -> EditorSession:
    session = app.state.sessions.get(sid)
    if session is None:
        raise HTTPException(status_code=404, detail="unknown session")
    return session


def _display_json(session: EditorSession) -> dict:
    model = session.display()
    return {"variant": model.variant, "elements": list(model.elements)}


def _apply_event(session: EditorSession, event: dict):
    kind = event.get("type")
    t = int(event.get("t", 0))
    if kind == "touch":
        ev = TouchEvent(kind=event["kind"], finger=int(event["finger"]),
                        x=float(event["x"]), y=float(event["y"]), t=t)
        return session.process_touch(ev)
    if kind == "chunk":
        return session.process_chunk(t, int(event["request_id"]),
                                     event.get("delta", ""),
                                     bool(event.get("done", False)))
    if kind == "confirm":
        return session.process_confirm(t)
    if kind == "reject":
        return session.process_reject(t)
    raise HTTPException(status_code=422, detail=f"unknown event type {kind!r}")


async def _complete(provider, req: GenerationRequest) -> str:
    if hasattr(provider, "acomplete"):
        return await provider.acomplete(req)
    return provider.complete(req)
