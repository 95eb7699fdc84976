# -*- python3 -*-
"""Retrieve degseq settings from defaults, user or site config, and the environment"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import json
import os
import warnings
from typing import TYPE_CHECKING, Any

import platformdirs

if TYPE_CHECKING:
    import pathlib

__all__ = ["DEFAULT_ORACLE_CAP", "ORACLE_CAP_ENV", "config_paths", "oracle_cap"]

DEFAULT_ORACLE_CAP = 10_000_000
ORACLE_CAP_ENV = "DEGSEQ_ORACLE_CAP"


def config_paths() -> list[pathlib.Path]:
    """Locations searched for ``degseq.json``, in priority order"""
    return [
        platformdirs.user_config_path("degseq") / "degseq.json",
        platformdirs.site_config_path("degseq") / "degseq.json",
    ]


def _read_config() -> dict[str, Any]:
    for path in config_paths():
        if path.exists():
            try:
                content = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, ValueError) as e:
                warnings.warn(f"Ignoring unreadable config {path}: {e}", stacklevel=3)
                continue
            if isinstance(content, dict):
                return content
            warnings.warn(f"Ignoring config {path}: not a JSON object", stacklevel=3)
    return {}


def _positive_int(value: Any, origin: str) -> int | None:
    """Convert a config value to a positive int, warning and returning None if that fails"""
    try:
        result = int(value)
    except (TypeError, ValueError):
        result = 0
    if result < 1:
        warnings.warn(f"Ignoring {origin}={value!r}: expected a positive integer", stacklevel=4)
        return None
    return result


def oracle_cap() -> int:
    """Largest number of realizations the oracle is allowed to enumerate"""
    cap = DEFAULT_ORACLE_CAP
    config = _read_config()
    if "oracle_cap" in config:
        cap = _positive_int(config["oracle_cap"], "oracle_cap") or cap
    env = os.environ.get(ORACLE_CAP_ENV)
    if env is not None:
        cap = _positive_int(env, ORACLE_CAP_ENV) or cap
    return cap
