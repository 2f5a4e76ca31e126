import time
import logging

logger = logging.getLogger(__name__)


class Timer:
    """
    Measures the duration (in seconds/ms) of a numeric pipeline stage.

    example:
        timer = Timer()  # creates and starts the Timer
        rows = approximate(u, schedule)
        elapsed = timer.get_elapsed_seconds()

        with Timer.logged("convergence schedule"):  # logs the duration when leaving the block
            rows = approximate(u, schedule)
    """

    def __init__(self, label: str = None):
        self._label = label
        self.reset()

    def reset(self):
        self._start = time.perf_counter()

    def get_elapsed_seconds(self):
        stop = time.perf_counter()
        return stop - self._start

    def get_elapsed_ms(self):
        return 1000.0 * self.get_elapsed_seconds()

    @classmethod
    def logged(cls, label: str):
        return cls(label)

    def __enter__(self):
        self.reset()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None:
            logger.info(f"{self._label} done in {self.get_elapsed_ms():.1f} ms")
        else:
            logger.info(f"{self._label} aborted after {self.get_elapsed_ms():.1f} ms")
