"""Text-generation clients for the synthesis pipeline.

The real client speaks a chat-completions-style JSON HTTP API; the scripted
generator implements the same one-method contract deterministically so the
pipeline can be tested (and re-run bit-identically) without a network.
"""

from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass
from typing import Callable, Protocol

import httpx

from .errors import GeneratorUnavailableError

DEFAULT_TEMPERATURE = 0.7
DEFAULT_API_KEY_ENV = "GENERATOR_API_KEY"


class GeneratorClient(Protocol):
    def complete(self, prompt: str, *, temperature: float | None = None) -> str: ...


@dataclass(frozen=True)
class GeneratorSettings:
    base_url: str = ""
    model: str = ""
    temperature: float = DEFAULT_TEMPERATURE
    api_key_env: str = DEFAULT_API_KEY_ENV  # credential comes from the env, never from flags
    timeout: float = 60.0
    max_retries: int = 3

    @classmethod
    def from_dict(cls, payload: dict) -> "GeneratorSettings":
        known = {f: payload[f] for f in payload if f in cls.__dataclass_fields__}
        return cls(**known)

    def to_dict(self) -> dict:
        return {
            "base_url": self.base_url,
            "model": self.model,
            "temperature": self.temperature,
            "api_key_env": self.api_key_env,
            "timeout": self.timeout,
            "max_retries": self.max_retries,
        }


class ChatCompletionsClient:
    """Minimal chat-completions client with retry on transport failures."""

    def __init__(self, settings: GeneratorSettings, client: httpx.Client | None = None):
        if not settings.base_url:
            raise GeneratorUnavailableError("generator base_url is not configured")
        self.settings = settings
        self._client = client or httpx.Client(timeout=settings.timeout)

    def complete(self, prompt: str, *, temperature: float | None = None) -> str:
        url = self.settings.base_url.rstrip("/") + "/chat/completions"
        body = {
            "model": self.settings.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.settings.temperature if temperature is None else temperature,
        }
        headers = {}
        api_key = os.environ.get(self.settings.api_key_env, "")
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"

        last_error: Exception | None = None
        for attempt in range(self.settings.max_retries):
            if attempt:
                time.sleep(min(0.2 * attempt, 1.0))
            try:
                response = self._client.post(url, json=body, headers=headers)
            except httpx.HTTPError as exc:
                last_error = exc
                continue
            if response.status_code >= 500:
                last_error = GeneratorUnavailableError(
                    f"generator returned HTTP {response.status_code}"
                )
                continue
            if response.status_code != 200:
                raise GeneratorUnavailableError(
                    f"generator returned HTTP {response.status_code}: {response.text[:200]}"
                )
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError, ValueError) as exc:
                raise GeneratorUnavailableError(
                    f"generator response is not chat-completions shaped: {exc}"
                ) from exc
        raise GeneratorUnavailableError(f"generator unreachable: {last_error}")


class ScriptedGenerator:
    """Deterministic generator for tests and dry runs.

    ``respond(prompt, attempt)`` is called with a per-prompt attempt counter
    starting at 1; a fresh instance (or ``reset()``) replays identically.
    """

    def __init__(self, respond: Callable[[str, int], str]):
        self._respond = respond
        self._attempts: dict[str, int] = {}
        self._lock = threading.Lock()

    def complete(self, prompt: str, *, temperature: float | None = None) -> str:
        with self._lock:
            attempt = self._attempts.get(prompt, 0) + 1
            self._attempts[prompt] = attempt
        return self._respond(prompt, attempt)

    def reset(self) -> None:
        with self._lock:
            self._attempts.clear()


def extract_prompt_input(prompt: str) -> str:
    """Pull the source text back out of a rendered prompt (mock-side helper)."""
    marker = "Input:"
    start = prompt.rfind(marker)
    if start < 0:
        return ""
    rest = prompt[start + len(marker):]
    end = rest.rfind("Output:")
    if end >= 0:
        rest = rest[:end]
    return rest.strip()
