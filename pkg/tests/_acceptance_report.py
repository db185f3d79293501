"""Shared registry so the acceptance criteria report one line each at the
end of the pytest run, regardless of output capture."""

import time
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(number: int, description: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"criterion {number:2d} FAIL: {description}"
        LINES.append(line)
        print(line)
        raise
    else:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:2d} PASS ({elapsed:6.2f}s): {description}"
        LINES.append(line)
        print(line)
