from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor


def pmap[T, R](fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Ordered map; `fn` must be a picklable top-level function when workers > 1."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(fn, items))
