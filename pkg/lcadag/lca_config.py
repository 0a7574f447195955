# File: lca_config.py
# Holds config variables that are used throughout the package.
import functools
import os
from typing import Tuple

from lcadag import lcadag_info
from lcadag.lca_helpers import logger

CURRENT_VERSION: Tuple[int, int, int] = lcadag_info["version"]

# Vertex cap for isomorphism and minor searches, the "desk scale"
DEFAULT_MAX_VERTICES = 24

# Cap on the number of subsets enumerated by exhaustive checks
DEFAULT_SUBSET_CAP = 2 ** 16

ENV_MAX_VERTICES = "LCADAG_MAX_N"
ENV_SUBSET_CAP = "LCADAG_SUBSET_CAP"
ENV_DEBUG = "LCADAG_DEBUG"

_debug = os.environ.get(ENV_DEBUG, "") not in ("", "0")


@functools.lru_cache(maxsize=None)
def _positive_int(name: str, raw: str, default: int) -> int:
    """Warns once per distinct bad value"""
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        logger.warn(
            f"{name}: '{raw}' is not a positive integer, using the default {default}"
        )
        return default
    return value


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return _positive_int(name, raw, default)


def get_max_vertices() -> int:
    return _int_from_env(ENV_MAX_VERTICES, DEFAULT_MAX_VERTICES)


def get_subset_cap() -> int:
    return _int_from_env(ENV_SUBSET_CAP, DEFAULT_SUBSET_CAP)


def getDebug() -> bool:
    return _debug


def setDebug(debug: bool) -> None:
    global _debug
    _debug = debug
