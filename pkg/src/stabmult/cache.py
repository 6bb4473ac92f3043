"""Append-only JSON-lines store for computed coefficients.

Each line is ``{"key": ..., "value": ..., "meta": ...}``. Lines that fail to
parse are skipped with a warning. A value never changes once written; a
conflicting write means an engine bug or a corrupted file and raises.
"""
from __future__ import annotations

import json
import logging
import os
import threading
from pathlib import Path

from .errors import CacheConflictError

log = logging.getLogger(__name__)

ENGINE_VERSION = "stabmult-1"
ENV_VAR = "STABMULT_CACHE"


class Cache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path else None
        self._values: dict[str, int] = {}
        self._lock = threading.Lock()
        self.skipped = 0
        if self.path is not None and self.path.exists():
            self._load()

    @classmethod
    def from_env(cls, path: str | None = None) -> "Cache":
        return cls(path or os.environ.get(ENV_VAR) or None)

    def _load(self) -> None:
        try:
            text = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read cache {self.path}: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                key, value = rec["key"], rec["value"]
                if not isinstance(key, str) or not isinstance(value, int) or isinstance(value, bool):
                    raise TypeError("bad field types")
            except (ValueError, KeyError, TypeError) as exc:
                self.skipped += 1
                log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                continue
            old = self._values.get(key)
            if old is not None and old != value:
                raise CacheConflictError(f"{self.path}:{lineno}: key {key!r} stored as {old} and {value}")
            self._values[key] = value

    def get(self, key: str) -> int | None:
        return self._values.get(key)

    def put(self, key: str, value: int) -> None:
        with self._lock:
            old = self._values.get(key)
            if old is not None:
                if old != value:
                    raise CacheConflictError(f"key {key!r} already holds {old}, refusing {value}")
                return
            self._values[key] = value
            if self.path is not None:
                line = json.dumps({"key": key, "value": value, "meta": ENGINE_VERSION}, separators=(",", ":"))
                try:
                    with self.path.open("a", encoding="utf-8") as fh:
                        fh.write(line + "\n")
                except OSError as exc:
                    raise OSError(f"cannot write cache {self.path}: {exc}") from exc

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: str) -> bool:
        return key in self._values
