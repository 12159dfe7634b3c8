"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import json
import os

import pytest

from kapoly.algebra.poly_core import L, M, Poly
from kapoly.errors import CacheConflict
from kapoly.knots.apoly import APolyRecord
from kapoly.storage.cache import ResultCache, resolve_cache_dir, verify_hash
from kapoly.storage.serialization import canonical_dumps, canonical_hash, read_json, write_json


@pytest.fixture
def cache(tmp_path):
    return ResultCache(str(tmp_path / "explicit"))


def test_env_override_wins(tmp_path, monkeypatch):
    monkeypatch.setenv("APOLY_CACHE_DIR", str(tmp_path / "env"))
    assert resolve_cache_dir(str(tmp_path / "explicit")) == str(tmp_path / "env")
    monkeypatch.delenv("APOLY_CACHE_DIR")
    assert resolve_cache_dir(str(tmp_path / "explicit")) == str(tmp_path / "explicit")
    assert resolve_cache_dir().endswith(os.path.join(".cache", "kapoly"))


def test_put_and_get(monkeypatch, tmp_path):
    monkeypatch.delenv("APOLY_CACHE_DIR")
    cache = ResultCache(str(tmp_path / "explicit"))
    record = APolyRecord(1, L**2 * M + 1, "closed")
    path = cache.put(record)
    assert os.path.basename(path) == "a_poly_1_closed.json"
    assert cache.get(1, "closed") == record
    assert cache.get(1, "closed-subst") is None
    assert cache.get(2, "closed") is None


def test_put_same_hash_twice(cache):
    record = APolyRecord(-1, L + 1, "closed")
    cache.put(record)
    cache.put(record)
    assert len(cache.entries()) == 1


def test_conflicting_put(cache):
    cache.put(APolyRecord(1, L + 1, "closed"))
    with pytest.raises(CacheConflict):
        cache.put(APolyRecord(1, L + 2, "closed"))


def test_stale_hash_is_a_miss(cache):
    path = cache.put(APolyRecord(1, L + 1, "closed"))
    obj = read_json(path)
    assert verify_hash(obj)
    obj["hash"] = "0" * 64
    write_json(path, obj)
    assert not verify_hash(obj)
    assert cache.get(1, "closed") is None


def test_put_replaces_stale_entry(cache):
    path = cache.put(APolyRecord(1, L + 1, "closed"))
    write_json(path, {**read_json(path), "hash": "0" * 64})
    record = APolyRecord(1, L + 2, "closed")
    cache.put(record)
    assert cache.get(1, "closed") == record


def test_undecodable_entry(cache):
    path = cache.path(1, "closed")
    os.makedirs(cache.directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("{truncated")
    assert cache.get(1, "closed") is None
    assert [(e["terms"], e["valid"]) for e in cache.entries()] == [(0, False)]
    record = APolyRecord(1, L + 1, "closed")
    cache.put(record)
    assert cache.get(1, "closed") == record
    assert cache.entries()[0]["valid"]


def test_malformed_entry_is_a_miss(cache):
    path = cache.path(1, "closed")
    write_json(path, [1, 2])
    assert cache.get(1, "closed") is None
    write_json(path, {"hash": "x"})
    assert cache.get(1, "closed") is None
    assert cache.clear() == 1


def test_entries_and_clear(cache):
    cache.put(APolyRecord(2, L + 1, "closed"))
    cache.put(APolyRecord(-1, L + M, "recursive-subst"))
    with open(os.path.join(cache.directory, "notes.json"), "w", encoding="utf-8") as f:
        f.write("{}")
    entries = cache.entries()
    assert [(e["n"], e["route"], e["terms"]) for e in entries] == [(-1, "recursive-subst", 2), (2, "closed", 2)]
    assert cache.clear() == 2
    assert cache.entries() == []
    assert os.path.exists(os.path.join(cache.directory, "notes.json"))


def test_canonical_serialization(tmp_path):
    assert canonical_dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert canonical_hash(L + 1) == canonical_hash((L + 1).to_json_obj())
    path = tmp_path / "nested" / "p.json"
    write_json(str(path), APolyRecord(1, L + 1, "closed").to_json_obj())
    assert Poly.from_json_obj(read_json(str(path))["a"]) == L + 1
    assert json.loads(path.read_text(encoding="utf-8"))["route"] == "closed"
    assert [p.name for p in path.parent.iterdir()] == ["p.json"]
