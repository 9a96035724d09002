import logging
from datetime import datetime, timedelta

from gi0est.atomic_counter import AtomicCounter


class ProgressLogger:
    """Logs started/progress/finished messages for a long run of work units, from any thread.

    With a known total, a message is logged each time another log_percentage_step percent is done,
    together with the throughput so far and the time left at that rate. Without a total, a message
    is logged every log_unit_step units.
    """

    def __init__(self, name='work', unit='items', logger=None, log_percentage_step=10, log_unit_step=5000):
        self.name = name
        self.unit = unit
        self.total_units = None

        self.start_time = None
        self.end_time = None
        self.counter = AtomicCounter()
        self.log_percentage_step = log_percentage_step
        self.log_unit_step = log_unit_step
        self.logger = logger if logger is not None else logging.getLogger('ProgressLogger')

    def start(self, total_units=None):
        self.total_units = total_units
        self.start_time = datetime.now()
        message = 'Started {}.'.format(self.name)
        if total_units is not None:
            message += ' {} to process: {}.'.format(self.unit.capitalize(), total_units)
        self.logger.info(message)

    # Two threads crossing the same step together may both log it
    def track(self, unit_count=1):
        done = self.counter.increment(unit_count)
        done_before = done - unit_count

        if not self.total_units:
            if done_before // self.log_unit_step != done // self.log_unit_step:
                self.logger.info('{} {} done.'.format(done, self.unit))
            return

        percentage = done * 100 / self.total_units
        percentage_before = done_before * 100 / self.total_units
        if int(percentage_before / self.log_percentage_step) == int(percentage / self.log_percentage_step):
            return

        message = '{} {} done. Progress is {}%.'.format(done, self.unit, int(percentage))
        elapsed = self._elapsed_seconds()
        if elapsed > 0:
            rate = done / elapsed
            message += ' {:.1f} {}/s.'.format(rate, self.unit)
            if done < self.total_units:
                message += ' Estimated time left: {}.'.format(
                    timedelta(seconds=round((self.total_units - done) / rate)))
        self.logger.info(message)

    def finish(self):
        message = 'Finished {}. {} done: {}.'.format(self.name, self.unit.capitalize(), self.counter.value)
        if self.start_time is not None:
            self.end_time = datetime.now()
            message += ' Took {}.'.format(self.end_time - self.start_time)
        self.logger.info(message)

    def _elapsed_seconds(self):
        if self.start_time is None:
            return 0.0
        return (datetime.now() - self.start_time).total_seconds()
