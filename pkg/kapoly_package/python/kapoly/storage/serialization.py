"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# JSON helpers shared by the golden files, the result cache and the
# CLI. The canonical form of a JSON object is sorted keys with no
# whitespace; its SHA-256 is the hash stored next to every result.
# ==================================================================

import hashlib
import json
import os
import tempfile
from typing import Any

from ..algebra.poly_core import Poly


def canonical_dumps(obj: Any) -> str:
    """Serializes with sorted keys and compact separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def canonical_hash(obj: Any) -> str:
    """SHA-256 hex digest of the canonical serialization of a JSON object."""
    if isinstance(obj, Poly):
        obj = obj.to_json_obj()
    return hashlib.sha256(canonical_dumps(obj).encode("utf-8")).hexdigest()


def file_sha256(path: str) -> str:
    """SHA-256 hex digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_json(path: str, obj: Any, indent: int = 1):
    """
    Writes a JSON file atomically: the data goes to a temporary file in the
    same directory, which then replaces `path`.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump(obj, f, indent=indent, sort_keys=True)
            f.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
