"""Ordered map over independent work items, serial or pooled."""
import concurrent.futures
from typing import Any, Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_METHODS = ("threads", "processes")


def _check_arguments(func: Any, num_jobs: int, method: str) -> None:
    if num_jobs < 0:
        raise ValueError("Number of jobs must be a non-negative integer")
    if method not in _METHODS:
        raise ValueError(f"Method must be one of {', '.join(map(repr, _METHODS))}")
    if not callable(func):
        raise ValueError("The func argument must be callable")


def _executor(num_jobs: int, method: str) -> concurrent.futures.Executor:
    if method == "threads":
        return concurrent.futures.ThreadPoolExecutor(max_workers=num_jobs)
    return concurrent.futures.ProcessPoolExecutor(max_workers=num_jobs)


def parallelize(
    func: Callable[[T], R],
    data: Iterable[T],
    num_jobs: int = 0,
    method: str = "threads",
) -> List[R]:
    """
    Applies ``func`` to every item and returns the results in input order.

    ``num_jobs == 0`` runs in the calling thread. With ``method="processes"``
    the function and the items must be picklable (module-level callables).

    Raises:
        ValueError: On a negative job count, an unknown method or a
            non-callable ``func``.
        RuntimeError: If any pooled call fails; the original exception is
            chained.
    """
    _check_arguments(func, num_jobs, method)
    if num_jobs == 0:
        return [func(item) for item in data]

    try:
        with _executor(num_jobs, method) as executor:
            return list(executor.map(func, data))
    except Exception as e:
        raise RuntimeError(f"Parallel execution failed: {e}") from e
