import os
from typing import TypeVar, Callable, Any, cast
from joblib import Memory
from functools import cache
from dotenv import load_dotenv

load_dotenv()

CACHE_DIR = "./.cachedir"
MEMORY = Memory(CACHE_DIR, verbose=0)
ENABLE_CACHE = os.getenv("CRGATE_ENABLE_CACHE", "0") == "1"

T = TypeVar("T", bound=Callable[..., Any])


def cached_evaluation(func: T) -> T:
    """
    File cache in CACHE_DIR plus an in-memory cache when CRGATE_ENABLE_CACHE=1, the plain function otherwise.
    Arguments must be hashable; sweep points are passed as JSON strings.
    """
    return cast(T, cache(MEMORY.cache(func)) if ENABLE_CACHE else func)


def clear_cache() -> None:
    MEMORY.clear(warn=False)
