import threading


class AtomicCounter:
    def __init__(self, start=0):
        self._value = start
        self._lock = threading.Lock()

    def increment(self, increment=1):
        assert increment > 0
        with self._lock:
            self._value += increment
            return self._value

    @property
    def value(self):
        with self._lock:
            return self._value
