from __future__ import annotations
import os, json
from typing import Any

import yaml

def env_int(name: str, default: int | None = None) -> int | None:
    v = os.getenv(name)
    if v is None or v == "":
        return default
    try:
        return int(v)
    except ValueError:
        return default

def load_yaml(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}

def data_path(pkg_file: str, name: str) -> str:
    """Path of a data file shipped next to a module."""
    return os.path.join(os.path.dirname(os.path.abspath(pkg_file)), name)

def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
