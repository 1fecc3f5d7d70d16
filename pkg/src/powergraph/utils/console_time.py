import logging
import threading
import time
from contextlib import contextmanager
from typing import Dict, Iterator, List

logger = logging.getLogger(__name__)


def format_elapsed(elapsed: float) -> str:
    minutes, seconds = divmod(elapsed, 60)
    if minutes >= 1:
        return f"{int(minutes)}m {seconds:05.2f}s"
    return f"{seconds:.4f}s"


class Console:
    """Cronômetros por rótulo; o mesmo rótulo pode ser aberto de novo antes de fechar."""

    _timers: Dict[str, List[float]] = {}
    _lock = threading.Lock()

    @staticmethod
    def time(label: str) -> None:
        with Console._lock:
            Console._timers.setdefault(label, []).append(time.perf_counter())

    @staticmethod
    def time_end(label: str) -> float:
        with Console._lock:
            starts = Console._timers.get(label)
            if not starts:
                raise ValueError(f"Timer '{label}' não existe")
            start = starts.pop()
            if not starts:
                del Console._timers[label]

        elapsed = time.perf_counter() - start
        logger.info(f"⏱️ {label}: {format_elapsed(elapsed)}")
        return elapsed


@contextmanager
def timed(label: str) -> Iterator[None]:
    Console.time(label)
    try:
        yield
    finally:
        Console.time_end(label)
