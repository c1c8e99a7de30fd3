"""On-disk cache of computed sequence values.

Layout under the cache root (``$PLETHYSM_CACHE_DIR``, default ``./.cache``)::

    values/<name>.json       {"kind": "a"|"c", "lambda": [...], "p": p, "k": k,
                              "mu": [...] or null, "values": {"<d>": "<int>"}}
    characters/S<p>.json     character tables, see characters.CharacterTable

Writes go through a temporary file and ``os.replace``; only the main process
writes, workers just compute.
"""
from __future__ import annotations

import json
import os
import shutil
import tempfile
from pathlib import Path
from typing import Optional

from .partitions import Partition, format_partition

ENV_VAR = "PLETHYSM_CACHE_DIR"


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, ".cache"))


def _atomic_write(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)


class ValueCache:
    """Sequence values keyed by ``(kind, lambda, p, k, mu)`` and ``d``."""

    def __init__(self, root: Optional[os.PathLike] = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    @staticmethod
    def name(kind: str, la: Partition, p: int, k: int, mu: Optional[Partition]) -> str:
        base = f"{kind}_l{format_partition(la).replace(',', '.')}_p{p}_k{k}"
        return base + (f"_m{format_partition(mu).replace(',', '.')}" if mu is not None else "")

    def _path(self, kind, la, p, k, mu) -> Path:
        return self.root / "values" / f"{self.name(kind, la, p, k, mu)}.json"

    def load(self, kind: str, la: Partition, p: int, k: int, mu: Optional[Partition]) -> dict[int, int]:
        path = self._path(kind, la, p, k, mu)
        if not path.exists():
            return {}
        with open(path) as fh:
            data = json.load(fh)
        return {int(d): int(v) for d, v in data["values"].items()}

    def store(self, kind: str, la: Partition, p: int, k: int, mu: Optional[Partition],
              values: dict[int, int]) -> None:
        merged = self.load(kind, la, p, k, mu)
        merged.update(values)
        _atomic_write(self._path(kind, la, p, k, mu), {
            "kind": kind, "lambda": list(la), "p": p, "k": k,
            "mu": list(mu) if mu is not None else None,
            "values": {str(d): str(v) for d, v in sorted(merged.items())},
        })

    def info(self) -> dict:
        files = sorted(self.root.glob("**/*.json")) if self.root.exists() else []
        return {"path": str(self.root), "files": len(files),
                "bytes": sum(f.stat().st_size for f in files)}

    def clear(self) -> None:
        if self.root.exists():
            shutil.rmtree(self.root)
