import logging

LOG_FORMAT = '%(asctime)s - %(name)s [%(levelname)s] - %(message)s'


def logging_basic_config(filename=None, level=logging.INFO):
    if filename is not None:
        logging.basicConfig(level=level, format=LOG_FORMAT, filename=filename)
    else:
        logging.basicConfig(level=level, format=LOG_FORMAT)
