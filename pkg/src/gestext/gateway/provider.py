"""LLM providers: a deterministic mock and an OpenAI-compatible client.

The mock is the test and replay workhorse: scripted token sequences or
seeded lorem-style sentences, chunked 1-3 tokens at a time, with optional
modelled latency. Under a fixed seed, byte-identical across runs.
"""

from __future__ import annotations

import asyncio
import json
import os
from dataclasses import dataclass
from typing import AsyncIterator, Iterator, Optional, Sequence

import httpx

from ..rng import SplitMix64
from .latency import LatencyModel
from .templates import GenerationRequest, render_prompt

_LOREM = (
    "lorem ipsum dolor sit amet consectetur adipiscing elit sed do eiusmod "
    "tempor incididunt ut labore et dolore magna aliqua enim minim veniam "
    "quis nostrud exercitation ullamco laboris nisi aliquip commodo consequat"
).split()

SENTENCE_MIN_WORDS = 6
SENTENCE_MAX_WORDS = 14


@dataclass
class Chunk:
    request_id: int
    delta: str
    done: bool
    delay_ms: float = 0.0

    def to_json(self) -> dict:
        return {"requestId": self.request_id, "delta": self.delta,
                "done": self.done}


class MockProvider:
    """Deterministic stand-in for the real API.

    ``script``: list of pipe-delimited delta strings, consumed one entry per
    request ("Hello| world.|" streams two deltas). When the script runs out
    (or none is given) the seeded lorem generator takes over.
    """

    def __init__(self, seed: int = 0, script: Optional[Sequence[str]] = None,
                 latency: Optional[LatencyModel] = None) -> None:
        self.seed = seed
        self.script = list(script) if script else []
        self.latency = latency or LatencyModel(enabled=False)
        self._calls = 0
        self._delay_rng = SplitMix64(seed ^ 0xD1E5)

    def _sentence(self, rng: SplitMix64) -> str:
        n = rng.uniform_int(SENTENCE_MIN_WORDS, SENTENCE_MAX_WORDS)
        words = [_LOREM[rng.uniform_int(0, len(_LOREM) - 1)] for _ in range(n)]
        words[0] = words[0].capitalize()
        return " ".join(words) + "."

    def deltas(self, req: GenerationRequest) -> list[str]:
        """The full chunk sequence for one request, no delays applied."""
        call_index = self._calls
        self._calls += 1
        if call_index < len(self.script):
            return self.script[call_index].split("|")
        rng = SplitMix64(self.seed).fork(call_index + 1)
        text = " ".join(self._sentence(rng) for _ in range(max(1, req.max_sentences)))
        tokens = []
        for i, w in enumerate(text.split(" ")):
            tokens.append(w if i == 0 else " " + w)
        out = []
        i = 0
        while i < len(tokens):
            take = rng.uniform_int(1, 3)
            out.append("".join(tokens[i : i + take]))
            i += take
        return out

    def stream(self, req: GenerationRequest) -> Iterator[Chunk]:
        """Chunks with modelled delays attached (not slept); the caller
        decides whether the delay is real time or virtual time."""
        for d in self.deltas(req):
            yield Chunk(req.request_id, d, done=False,
                        delay_ms=self.latency.sample_ms(self._delay_rng))
        yield Chunk(req.request_id, "", done=True, delay_ms=0.0)

    async def astream(self, req: GenerationRequest) -> AsyncIterator[Chunk]:
        for chunk in self.stream(req):
            if self.latency.enabled and chunk.delay_ms > 0:
                await asyncio.sleep(chunk.delay_ms / 1000.0)
            yield chunk

    def complete(self, req: GenerationRequest) -> str:
        return "".join(self.deltas(req))


@dataclass
class ProviderConfig:
    base_url: str = "https://api.openai.com/v1"
    api_key: str = ""
    model: str = "gpt-4o-mini"

    @staticmethod
    def from_env() -> "ProviderConfig":
        return ProviderConfig(
            base_url=os.environ.get("GESTEXT_PROVIDER_URL",
                                    "https://api.openai.com/v1"),
            api_key=os.environ.get("GESTEXT_API_KEY", ""),
            model=os.environ.get("GESTEXT_MODEL", "gpt-4o-mini"),
        )


class OpenAICompatProvider:
    """Streams chat completions from any OpenAI-dialect server."""

    def __init__(self, config: ProviderConfig) -> None:
        self.config = config

    def _messages(self, req: GenerationRequest) -> list[dict]:
        if req.template == "chat" and "messages" in req.variables:
            return list(req.variables["messages"])
        system, user = render_prompt(req)
        messages = []
        if system:
            messages.append({"role": "system", "content": system})
        messages.append({"role": "user", "content": user})
        return messages

    async def astream(self, req: GenerationRequest) -> AsyncIterator[Chunk]:
        payload = {"model": self.config.model, "stream": True,
                   "messages": self._messages(req)}
        headers = {"Authorization": f"Bearer {self.config.api_key}"}
        async with httpx.AsyncClient(timeout=60.0) as client:
            async with client.stream(
                "POST", f"{self.config.base_url}/chat/completions",
                json=payload, headers=headers,
            ) as response:
                response.raise_for_status()
                async for line in response.aiter_lines():
                    if not line.startswith("data:"):
                        continue
                    data = line[5:].strip()
                    if data == "[DONE]":
                        break
                    delta = (json.loads(data)["choices"][0]
                             .get("delta", {}).get("content"))
                    if delta:
                        yield Chunk(req.request_id, delta, done=False)
        yield Chunk(req.request_id, "", done=True)

    async def acomplete(self, req: GenerationRequest) -> str:
        parts = []
        async for chunk in self.astream(req):
            parts.append(chunk.delta)
        return "".join(parts)
