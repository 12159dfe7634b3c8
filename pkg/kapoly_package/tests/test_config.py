"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import logging

import pytest

from kapoly.config import DEFAULT_CONFIG_FILE, load_config, load_yaml_file
from kapoly.log import configure_logging, debug_stream_enabled, get_logger


def test_packaged_defaults(monkeypatch):
    monkeypatch.delenv("APOLY_CACHE_DIR")
    config = load_config()
    assert config["compute"]["default_route"] == "closed"
    assert config["verify"]["default_max_n"] == 4
    assert config["verify"]["oracle_n"] == [-2, -1, 1, 2]
    assert config["properties"]["cases"] == 500
    assert config["cache"]["directory"] == "~/.cache/kapoly"
    assert load_yaml_file(DEFAULT_CONFIG_FILE) == config


def test_user_file_is_merged(tmp_path):
    path = tmp_path / "user.yml"
    path.write_text("verify:\n  default_max_n: 6\nlogging:\n  level: INFO\n", encoding="utf-8")
    config = load_config(str(path))
    assert config["verify"]["default_max_n"] == 6
    assert config["verify"]["longitude_n"] == [-1, 1]
    assert config["logging"]["level"] == "INFO"


def test_env_overrides_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("APOLY_CACHE_DIR", str(tmp_path))
    assert load_config()["cache"]["directory"] == str(tmp_path)


def test_empty_user_file(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("", encoding="utf-8")
    assert load_config(str(path))["compute"]["parallel_routes"] is True


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        load_config("does-not-exist.yml")


def test_logging_setup(monkeypatch):
    monkeypatch.delenv("APOLY_DEBUG_STREAM", raising=False)
    assert not debug_stream_enabled()
    logger = configure_logging("INFO")
    assert logger.level == logging.INFO
    assert len(logger.handlers) == 1
    configure_logging("WARNING")
    assert len(logging.getLogger("kapoly").handlers) == 1
    assert get_logger("knots.apoly").name == "kapoly.knots.apoly"
    assert get_logger("kapoly.cli").name == "kapoly.cli"


def test_debug_stream_forces_debug(monkeypatch):
    monkeypatch.setenv("APOLY_DEBUG_STREAM", "true")
    assert debug_stream_enabled()
    assert configure_logging("WARNING").level == logging.DEBUG
