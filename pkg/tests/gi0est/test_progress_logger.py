from gi0est.progress_logger import ProgressLogger


def test_progress_logger_without_total():
    logger_mock = LoggerMock()
    progress_logger = ProgressLogger(logger=logger_mock, log_unit_step=1000)

    progress_logger.start()
    [progress_logger.track(100) for _ in range(100)]
    progress_logger.finish()

    assert len(logger_mock.logs) == 12
    assert logger_mock.logs[0] == 'Started work.'
    assert logger_mock.logs[1] == '1000 items done.'
    assert logger_mock.logs[10] == '10000 items done.'
    assert logger_mock.logs[11].startswith('Finished work. Items done: 10000. Took ')


def test_progress_logger_with_total():
    logger_mock = LoggerMock()
    progress_logger = ProgressLogger(name='Monte Carlo grid', unit='replicates', logger=logger_mock,
                                     log_percentage_step=10)

    progress_logger.start(total_units=1000)
    [progress_logger.track(100) for _ in range(10)]
    progress_logger.finish()

    assert len(logger_mock.logs) == 12
    assert logger_mock.logs[0] == 'Started Monte Carlo grid. Replicates to process: 1000.'
    assert logger_mock.logs[1].startswith('100 replicates done. Progress is 10%.')
    assert logger_mock.logs[10].startswith('1000 replicates done. Progress is 100%.')
    assert 'Estimated time left' not in logger_mock.logs[10]
    assert logger_mock.logs[11].startswith('Finished Monte Carlo grid. Replicates done: 1000. Took ')


def test_progress_logger_logs_each_step_once_for_uneven_batches():
    logger_mock = LoggerMock()
    progress_logger = ProgressLogger(unit='rows', logger=logger_mock, log_percentage_step=25)

    progress_logger.start(total_units=10)
    [progress_logger.track(3) for _ in range(3)]
    progress_logger.track(1)
    progress_logger.finish()

    progress = [log for log in logger_mock.logs if 'Progress is' in log]
    assert [log.split(' rows done.')[0] for log in progress] == ['3', '6', '9', '10']


class LoggerMock:
    def __init__(self):
        self.logs = []

    def info(self, message):
        self.logs.append(message)
