"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# On-disk result cache. One file a_poly_<n>_<route>.json per result,
# holding the APolyRecord JSON with its canonical hash. Writes are
# serialized by a lock and are atomic. An unreadable entry or one whose
# stored hash is stale is a miss and may be overwritten; only a valid
# entry with a different hash raises CacheConflict.
# ==================================================================

import glob
import os
import re
import threading
from os import environ
from typing import List, Optional

from ..errors import CacheConflict
from ..knots.apoly import APolyRecord
from ..log import get_logger
from .serialization import canonical_hash, read_json, write_json

logger = get_logger(__name__)

_ENTRY = re.compile(r"^a_poly_(-?\d+)_([a-z-]+)\.json$")


def resolve_cache_dir(directory: Optional[str] = None) -> str:
    """APOLY_CACHE_DIR wins over `directory`, which wins over ~/.cache/kapoly."""
    chosen = environ.get("APOLY_CACHE_DIR") or directory or "~/.cache/kapoly"
    return os.path.abspath(os.path.expanduser(chosen))


class ResultCache:
    """A directory of computed A-polynomials keyed by (n, route)."""

    def __init__(self, directory: Optional[str] = None):
        self.directory = resolve_cache_dir(directory)
        self._lock = threading.Lock()

    def path(self, n: int, route: str) -> str:
        return os.path.join(self.directory, f"a_poly_{n}_{route}.json")

    def get(self, n: int, route: str) -> Optional[APolyRecord]:
        """
        The cached record, or None. An unreadable entry, or one whose stored hash
        does not match its polynomial, is treated as a miss.
        """
        path = self.path(n, route)
        if not os.path.exists(path):
            logger.debug("Cache miss for n=%d route=%s", n, route)
            return None
        obj = _load(path)
        if obj is None:
            return None
        if not verify_hash(obj):
            logger.warning("Cache entry %s has a stale hash; ignoring it", path)
            return None
        try:
            record = APolyRecord.from_json_obj(obj)
        except (KeyError, TypeError, ValueError) as e:
            logger.warning("Cache entry %s is malformed (%s); ignoring it", path, e)
            return None
        logger.debug("Cache hit for n=%d route=%s", n, route)
        return record

    def put(self, record: APolyRecord) -> str:
        """
        Stores a record and returns its path.

        Raises:
            CacheConflict: If a valid entry exists with a different hash.
        """
        path = self.path(record.n, record.route)
        with self._lock:
            if os.path.exists(path):
                existing = _load(path)
                if existing is not None and verify_hash(existing):
                    if existing["hash"] != record.hash:
                        raise CacheConflict(f"Cache entry {os.path.basename(path)} holds hash {existing['hash']}, new result has {record.hash}")
                else:
                    logger.warning("Overwriting invalid cache entry %s", path)
            write_json(path, record.to_json_obj())
        logger.debug("Cached n=%d route=%s at %s", record.n, record.route, path)
        return path

    def entries(self) -> List[dict]:
        """One summary per cache file, sorted by n then route."""
        out = []
        for path in glob.glob(os.path.join(self.directory, "a_poly_*.json")):
            match = _ENTRY.match(os.path.basename(path))
            if not match:
                continue
            obj = _load(path) or {}
            valid = verify_hash(obj)
            out.append(
                {
                    "n": int(match.group(1)),
                    "route": match.group(2),
                    "hash": obj.get("hash", "") if valid else "",
                    "terms": len(obj["a"].get("terms", [])) if valid else 0,
                    "valid": valid,
                    "path": path,
                }
            )
        return sorted(out, key=lambda e: (e["n"], e["route"]))

    def clear(self) -> int:
        """Deletes every cache file; returns how many were removed."""
        removed = 0
        with self._lock:
            for entry in self.entries():
                os.remove(entry["path"])
                removed += 1
        logger.info("Removed %d cache entries from %s", removed, self.directory)
        return removed


def _load(path: str) -> Optional[dict]:
    """The JSON object in a cache file, or None if it cannot be decoded."""
    try:
        obj = read_json(path)
    except (OSError, ValueError) as e:
        logger.warning("Cache entry %s is unreadable (%s); ignoring it", path, e)
        return None
    if not isinstance(obj, dict):
        logger.warning("Cache entry %s does not hold a record; ignoring it", path)
        return None
    return obj


def verify_hash(obj: dict) -> bool:
    """True when a record's stored hash is the canonical hash of its polynomial."""
    a = obj.get("a")
    return isinstance(a, dict) and obj.get("hash") == canonical_hash(a)


__all__ = ["ResultCache", "resolve_cache_dir", "verify_hash"]
