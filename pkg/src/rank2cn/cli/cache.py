"""Append-only JSON-lines result cache keyed by a content hash."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

CACHE_ENV = "RANK2CN_CACHE_DIR"
CACHE_FILE = "results.jsonl"


def cache_dir() -> Path:
    raw = os.environ.get(CACHE_ENV)
    if raw:
        return Path(raw)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "rank2cn"


def cache_key(version: str, command: str, params: dict) -> str:
    blob = json.dumps([version, command, params], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Path | None = None):
        self.directory = Path(directory) if directory else cache_dir()
        self.path = self.directory / CACHE_FILE

    def get(self, key: str):
        if not self.path.exists():
            return None
        found = None
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue  # a torn write; later lines may still be fine
                if rec.get("key") == key:
                    found = rec["result"]
        return found

    def put(self, key: str, result) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        line = json.dumps({"key": key, "result": result}, sort_keys=True)
        with self.path.open("a") as fh:
            fh.write(line + "\n")
