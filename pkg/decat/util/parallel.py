"""Order-stable concurrent map.

Results are always returned in the order of the inputs, whatever the order in which the
workers finish, so reports assembled from them are deterministic.

>>> ordered_map(lambda x: x * x, [3, 1, 2], jobs=2)
[9, 1, 4]
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from decat.util import env_int

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    "The number of workers, read from DECAT_JOBS (default 1)."
    return env_int("DECAT_JOBS", 1, minimum=1)


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = None) -> List[R]:
    """Apply ``func`` to every item using up to ``jobs`` threads.

    With a single job (the default unless DECAT_JOBS says otherwise) everything runs in
    the calling thread. Exceptions propagate from the first failing item in input
    order."""
    items = list(items)
    if jobs is None:
        jobs = default_jobs()
    if jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs}.")
    if jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug("Mapping %d items over %d threads.", len(items), jobs)
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(func, item) for item in items]
        return [future.result() for future in futures]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
