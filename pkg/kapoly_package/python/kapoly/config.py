"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""

import copy
import os
from os import environ

import yaml

DEFAULT_CONFIG_FILE = "kapoly_default.yml"
_PACKAGE_DIR = os.path.dirname(os.path.abspath(__file__))


def _deep_merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_yaml_file(file_path: str) -> dict:
    """
    Loads a YAML configuration file.

    The file is searched for as given, then in the packaged `config/` directory,
    then relative to the current working directory.

    Args:
        file_path (str): The name or relative path of the YAML file.

    Returns:
        dict: The parsed YAML content (an empty dict for an empty file).

    Raises:
        FileNotFoundError: If the YAML file cannot be found.
    """
    search_paths = [
        file_path,
        os.path.join(_PACKAGE_DIR, "config", file_path),
        os.path.join(os.getcwd(), file_path),
    ]
    for path in search_paths:
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f) or {}

    raise FileNotFoundError(f"Could not find the YAML configuration file '{file_path}' in any of the search paths.")


def load_config(path: str = None) -> dict:
    """
    Returns the effective configuration.

    The packaged defaults are loaded and, when `path` is given, the user file is
    merged over them. APOLY_CACHE_DIR overrides the cache directory.

    Args:
        path (str, optional): A user YAML file.

    Returns:
        dict: The merged configuration.
    """
    config = load_yaml_file(DEFAULT_CONFIG_FILE)
    if path is not None:
        config = _deep_merge(config, load_yaml_file(path))

    cache_override = environ.get("APOLY_CACHE_DIR")
    if cache_override:
        config.setdefault("cache", {})["directory"] = cache_override
    return config
