import logging
import threading

from gi0est.executors.bounded_executor import BoundedExecutor
from gi0est.executors.fail_safe_executor import FailSafeExecutor
from gi0est.progress_logger import ProgressLogger
from gi0est.utils import batch_iterator


# Executes the given work in fixed-size batches on a thread or process pool.
# Batch results reach result_handler in completion order, so callers key their results.
class BatchWorkExecutor:
    def __init__(self, batch_size, max_workers, use_processes=False, progress_name='work', progress_unit='items'):
        self.batch_size = batch_size
        self.max_workers = max_workers
        self.use_processes = use_processes
        # Using bounded executor prevents unlimited queue growth
        # and allows monitoring in-progress futures and failing fast in case of errors.
        self.executor = FailSafeExecutor(BoundedExecutor(1, self.max_workers, use_processes=use_processes))
        self.progress_logger = ProgressLogger(name=progress_name, unit=progress_unit)
        self.logger = logging.getLogger('BatchWorkExecutor')
        self._result_lock = threading.Lock()

    def execute(self, work_iterable, work_handler, total_items=None, result_handler=None):
        """work_handler must be picklable (a module-level function or a functools.partial of one)
        when the executor runs on processes."""
        self.progress_logger.start(total_units=total_items)
        for batch in batch_iterator(work_iterable, self.batch_size):
            future = self.executor.submit(work_handler, batch)
            future.add_done_callback(self._on_done(len(batch), result_handler))

    def _on_done(self, batch_size, result_handler):
        def callback(future):
            if future.cancelled() or future.exception() is not None:
                return
            if result_handler is not None:
                with self._result_lock:
                    result_handler(future.result())
            self.progress_logger.track(batch_size)

        return callback

    def shutdown(self):
        self.executor.shutdown()
        self.progress_logger.finish()
