from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from threading import BoundedSemaphore


class BoundedExecutor:
    """A thread (or process) pool whose submit() blocks while queue_bound items wait behind the busy workers."""

    def __init__(self, queue_bound, max_workers, use_processes=False):
        pool_class = ProcessPoolExecutor if use_processes else ThreadPoolExecutor
        self._delegate = pool_class(max_workers=max_workers)
        self._slots = BoundedSemaphore(queue_bound + max_workers)

    def submit(self, fn, *args, **kwargs):
        self._slots.acquire()
        try:
            future = self._delegate.submit(fn, *args, **kwargs)
        except BaseException:
            self._slots.release()
            raise
        future.add_done_callback(lambda _: self._slots.release())
        return future

    def shutdown(self, wait=True):
        self._delegate.shutdown(wait)
