from concurrent.futures import ProcessPoolExecutor


def map_tasks(fn, tasks, workers=1):
    """Ordered ``map(fn, tasks)``, optionally across worker processes."""
    if workers is None or workers <= 1:
        yield from map(fn, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield from ex.map(fn, tasks)
