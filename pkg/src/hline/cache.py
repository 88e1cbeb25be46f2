"""Persistent, append-only classification cache.

Records are keyed by (canonical code, n) so isomorphic inputs share one
entry, and carry the tool version plus a budget fingerprint: a record
written under different budgets or by a different tool version is treated
as a miss, because outcomes such as "unknown" depend on both.

Each process appends to its own segment file, so concurrent sweeps never
contend on writes; segments are merged when the cache is opened, newest
record per key winning.  A per-record checksum lets corrupt lines be
skipped with a warning instead of poisoning the cache.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
import warnings
from pathlib import Path

from .budget import Budget
from .minimality import ClassificationSummary

ENV_CACHE_DIR = "HLINE_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hline"


def _record_sha(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ClassificationCache:
    def __init__(self, directory: Path | None, version: str, budget: Budget):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.version = version
        self.fingerprint = budget.fingerprint()
        self._records: dict[tuple[str, int], tuple[int, ClassificationSummary]] = {}
        self._segment: Path | None = None
        self._skipped = 0
        self.hits = 0
        self.misses = 0
        self._load()

    def _load(self) -> None:
        if not self.directory.is_dir():
            return
        for seg in sorted(self.directory.glob("seg-*.jsonl")):
            try:
                lines = seg.read_text().splitlines()
            except OSError as exc:
                warnings.warn(f"unreadable cache segment {seg}: {exc}")
                continue
            for line in lines:
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    payload = {k: rec[k] for k in ("key", "value", "version", "budget", "ts")}
                    if _record_sha(payload) != rec["sha"]:
                        raise ValueError("checksum mismatch")
                except (ValueError, KeyError, TypeError):
                    self._skipped += 1
                    warnings.warn(f"skipping corrupt cache record in {seg}")
                    continue
                if rec["version"] != self.version or rec["budget"] != self.fingerprint:
                    continue
                key = (rec["key"][0], int(rec["key"][1]))
                ts = int(rec["ts"])
                old = self._records.get(key)
                if old is None or ts >= old[0]:
                    self._records[key] = (ts, ClassificationSummary.from_json(rec["value"]))

    def get(self, code_hex: str, n: int) -> ClassificationSummary | None:
        hit = self._records.get((code_hex, n))
        if hit is None:
            self.misses += 1
            return None
        self.hits += 1
        return hit[1]

    def put(self, code_hex: str, n: int, summary: ClassificationSummary) -> None:
        ts = time.time_ns()
        key = (code_hex, n)
        old = self._records.get(key)
        if old is not None and old[1] == summary:
            return
        self._records[key] = (ts, summary)
        payload = {
            "key": [code_hex, n],
            "value": summary.to_json(),
            "version": self.version,
            "budget": self.fingerprint,
            "ts": ts,
        }
        payload["sha"] = _record_sha(
            {k: payload[k] for k in ("key", "value", "version", "budget", "ts")}
        )
        if self._segment is None:
            self.directory.mkdir(parents=True, exist_ok=True)
            self._segment = self.directory / f"seg-{os.getpid()}.jsonl"
        with self._segment.open("a") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")

    def stats(self) -> dict:
        return {
            "directory": str(self.directory),
            "entries": len(self._records),
            "segments": len(list(self.directory.glob("seg-*.jsonl")))
            if self.directory.is_dir()
            else 0,
            "corrupt_skipped": self._skipped,
            "hits": self.hits,
            "misses": self.misses,
        }

    def clear(self) -> int:
        removed = 0
        if self.directory.is_dir():
            for seg in self.directory.glob("seg-*.jsonl"):
                seg.unlink()
                removed += 1
        self._records.clear()
        self._segment = None
        return removed
