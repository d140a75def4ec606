# k3census/engine/utils.py
import os
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger("engine.utils")

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.path.join(ROOT_DIR, "data")
CATALOG_DIR = os.path.join(DATA_DIR, "catalogs")
BUNDLED_CATALOGS = {
    "reid": os.path.join(CATALOG_DIR, "reid.csv"),
    "fletcher": os.path.join(CATALOG_DIR, "fletcher.csv"),
}

DEFAULT_MAX_WEIGHT = 40
DEFAULT_JOBS = 1
DEFAULT_FORMAT = "md"
K3_SECOND_BETTI = 22

T = TypeVar("T")
R = TypeVar("R")


def get_catalog_path(name: str) -> str:
    """Path of a bundled catalog by name ("reid" / "fletcher")."""
    try:
        return BUNDLED_CATALOGS[name.lower()]
    except KeyError:
        raise KeyError(f"unknown catalog {name!r}; bundled: {', '.join(sorted(BUNDLED_CATALOGS))}")


def fan_out(fn: Callable[[T], R], items: Iterable[T], jobs: int = DEFAULT_JOBS) -> List[R]:
    """
    Map ``fn`` over ``items`` in input order, across ``jobs`` worker processes
    when jobs > 1. ``fn`` must be a module-level function.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    logger.info("fanning %d tasks over %d workers", len(items), jobs)
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    except Exception:
        logger.exception("worker failed in %s", getattr(fn, "__name__", fn))
        raise
