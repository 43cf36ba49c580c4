"""Persistent, thread-safe memo of Jack polynomial expansions.

The on-disk format is a JSON array of
``{"partition": "2,1", "coeffs": [{"partition": "1,1,1", "coeff": <ratfun>}, ...]}``
stored as ``jack.json`` inside the cache directory.  The directory comes from
``EXTVERTS_CACHE`` unless set explicitly; without one the cache is memory-only.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from pathlib import Path

from .algebra import ratfun_from_json, ratfun_to_json
from .partitions import Partition

ENV_VAR = "EXTVERTS_CACHE"
FILENAME = "jack.json"


class CacheError(OSError):
    pass


class JackCache:
    def __init__(self, directory=None):
        self._lock = threading.Lock()
        self._entries: dict = {}
        self._loaded = False
        self.directory = Path(directory) if directory else None

    @property
    def path(self):
        return self.directory / FILENAME if self.directory else None

    def _load(self):
        if self._loaded:
            return
        self._loaded = True
        if self.path is None or not self.path.exists():
            return
        with open(self.path) as fh:
            data = json.load(fh)
        for rec in data:
            lam = Partition.parse(rec["partition"])
            self._entries[lam] = {
                Partition.parse(c["partition"]): ratfun_from_json(c["coeff"])
                for c in rec["coeffs"]
            }

    def get(self, lam):
        with self._lock:
            self._load()
            return self._entries.get(Partition(lam))

    def put_if_absent(self, lam, terms: dict) -> dict:
        """Insert unless present; returns the stored value either way."""
        lam = Partition(lam)
        with self._lock:
            self._load()
            if lam in self._entries:
                return self._entries[lam]
            self._entries[lam] = dict(terms)
            if self.directory is not None:
                self._save()
            return self._entries[lam]

    def _save(self):
        data = [
            {
                "partition": str(lam),
                "coeffs": [{"partition": str(nu), "coeff": ratfun_to_json(c)}
                           for nu, c in sorted(terms.items(), reverse=True)],
            }
            for lam, terms in sorted(self._entries.items(), key=lambda kv: (kv[0].size, kv[0]))
        ]
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".jack-", suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(data, fh)
            os.replace(tmp, self.path)
        except OSError as exc:
            raise CacheError(f"cannot write Jack cache at {self.directory}: {exc}") from exc

    def stats(self) -> dict:
        with self._lock:
            self._load()
            return {
                "entries": len(self._entries),
                "max_degree": max((lam.size for lam in self._entries), default=0),
                "path": str(self.path) if self.path else None,
            }

    def clear(self):
        with self._lock:
            self._entries.clear()
            self._loaded = True
            if self.path is not None and self.path.exists():
                try:
                    self.path.unlink()
                except OSError as exc:
                    raise CacheError(f"cannot clear Jack cache at {self.path}: {exc}") from exc


_default = JackCache(os.environ.get(ENV_VAR) or None)


def default_cache() -> JackCache:
    return _default


def configure(directory=None) -> JackCache:
    """Replace the process-wide cache; ``None`` means memory-only."""
    global _default
    _default = JackCache(directory)
    return _default
