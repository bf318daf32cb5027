"""On-disk cache for field tables and scan slices.

Entries live under ``$PERMBIN_CACHE_DIR`` (default ``~/.cache/permbin``) and
are keyed by a hash of the field description, so a change of modulus or
generator can never serve stale tables. Unwritable locations are ignored.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

import numpy as np

# Tables smaller than this rebuild faster than they load.
MIN_CACHED_ORDER = 1 << 16


def cache_dir() -> Path:
    env = os.environ.get("PERMBIN_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "permbin"


def field_hash(desc: dict) -> str:
    blob = json.dumps(desc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _table_path(desc: dict) -> Path:
    return cache_dir() / "fields" / f"{field_hash(desc)}.npz"


def load_tables(desc: dict) -> dict[str, np.ndarray] | None:
    path = _table_path(desc)
    try:
        with np.load(path) as z:
            return {k: z[k] for k in ("exp", "log", "zech")}
    except (OSError, KeyError, ValueError):
        return None


def store_tables(desc: dict, tables: dict[str, np.ndarray]) -> None:
    path = _table_path(desc)
    tmp = path.with_suffix(f".{os.getpid()}.tmp.npz")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savez(tmp, **tables)
        os.replace(tmp, path)
    except OSError:
        pass


def _slice_path(desc: dict, key: dict) -> Path:
    return cache_dir() / "scans" / field_hash(desc) / f"{field_hash(key)}.json"


def load_slice(desc: dict, key: dict):
    try:
        with open(_slice_path(desc, key)) as fh:
            obj = json.load(fh)
    except (OSError, ValueError):
        return None
    return obj["value"] if obj.get("key") == key else None


def store_slice(desc: dict, key: dict, value) -> None:
    path = _slice_path(desc, key)
    tmp = path.with_suffix(f".{os.getpid()}.tmp")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, "w") as fh:
            json.dump({"key": key, "value": value}, fh)
        os.replace(tmp, path)
    except OSError:
        pass
