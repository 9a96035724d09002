import contextlib
import os
import pathlib
import sys


# https://stackoverflow.com/questions/17602878/how-to-handle-both-with-open-and-sys-stdout-nicely
@contextlib.contextmanager
def smart_open(filename=None, mode='w', binary=False, create_parent_dirs=True):
    fh = get_file_handle(filename, mode, binary, create_parent_dirs)

    try:
        yield fh
    finally:
        fh.close()


def get_file_handle(filename, mode='w', binary=False, create_parent_dirs=True):
    if create_parent_dirs and filename is not None and filename != '-' and 'w' in mode:
        dirname = os.path.dirname(filename)
        if dirname:
            pathlib.Path(dirname).mkdir(parents=True, exist_ok=True)
    full_mode = mode + ('b' if binary else '')
    is_file = filename and filename != '-'
    if is_file:
        fh = open(filename, full_mode)
    elif filename == '-':
        stream = sys.stdout if 'w' in mode else sys.stdin
        fh = UnclosableFile(stream.buffer if binary else stream)
    else:
        fh = NoopFile()
    return fh


def close_silently(file_handle):
    if file_handle is None:
        return
    try:
        file_handle.close()
    except OSError:
        pass


class UnclosableFile:
    """Standard streams are flushed, never closed."""

    def __init__(self, delegate):
        self._delegate = delegate

    def __getattr__(self, name):
        return getattr(self._delegate, name)

    def __iter__(self):
        return iter(self._delegate)

    @property
    def closed(self):
        return False

    def close(self):
        self._delegate.flush()


class NoopFile:
    def __enter__(self):
        return self

    def __exit__(self, *args):
        pass

    def readable(self):
        return False

    def writable(self):
        return True

    def seekable(self):
        return False

    @property
    def closed(self):
        return False

    def flush(self):
        pass

    def close(self):
        pass

    def write(self, bytes):
        return len(bytes)
