"""One-JSON-file-per-key result cache with atomic writes."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1
ENV_VAR = "HILBERT_POWERS_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "hilbert_powers"


def cache_key(ring: dict, s: int) -> str:
    canonical = json.dumps({"schema": SCHEMA_VERSION, "ring": ring, "s": s},
                           sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, ring: dict, s: int) -> dict | None:
        path = self._path(cache_key(ring, s))
        try:
            record = json.loads(path.read_text())
        except (OSError, ValueError):
            self.misses += 1
            return None
        if record.get("schema") != SCHEMA_VERSION:
            self.misses += 1
            return None
        self.hits += 1
        return record

    def put(self, ring: dict, s: int, record: dict) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(cache_key(ring, s))
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(record, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
