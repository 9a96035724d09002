import logging


class FailSafeExecutor:
    """Fails fast: the first failed work item is re-raised from the next submit() or from shutdown(),
    and the work items still queued behind it are cancelled."""

    def __init__(self, delegate):
        self._delegate = delegate
        self._futures = []
        self.logger = logging.getLogger('FailSafeExecutor')

    def submit(self, fn, *args, **kwargs):
        self._check_completed_futures()
        future = self._delegate.submit(fn, *args, **kwargs)
        self._futures.append(future)

        return future

    def shutdown(self):
        try:
            self._check_completed_futures()
        finally:
            self._delegate.shutdown(wait=True)
        self._check_completed_futures()
        assert len(self._futures) == 0

    def _check_completed_futures(self):
        for future in self._futures.copy():
            if future.done():
                if not future.cancelled() and future.exception() is not None:
                    self._cancel_pending()
                    self.logger.error('A work item failed, {} pending work items were cancelled.'.format(
                        len(self._futures) - 1))
                    self._futures = []
                    # Will throw the work item's exception here
                    future.result()
                self._futures.remove(future)

    def _cancel_pending(self):
        for future in self._futures:
            future.cancel()
