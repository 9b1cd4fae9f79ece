import os
from typing import Callable, TypeVar
from concurrent.futures import Executor, Future
from concurrent.futures.thread import ThreadPoolExecutor
from dotenv import load_dotenv

load_dotenv()

A = TypeVar("A")
B = TypeVar("B")


def thread_count() -> int:
    """Worker count from CRGATE_THREADS, 5 when unset."""
    count = int(os.getenv("CRGATE_THREADS", 5))
    if count < 1:
        raise ValueError(f"CRGATE_THREADS must be a positive integer, got {count}")
    return count


THREADPOOL = ThreadPoolExecutor(thread_count(), thread_name_prefix="crgate")


def par_map(items: list[A], func: Callable[[A], B], executor: Executor = THREADPOOL) -> list[B]:
    """
    Evaluates `func` on every item with the executor and returns the results in the order of `items`.
    With a ProcessPoolExecutor, `func` must be picklable.
    """
    futures: list[Future[B]] = [executor.submit(func, item) for item in items]
    return [future.result() for future in futures]
