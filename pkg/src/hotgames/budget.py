"""Wall-clock budget for long-running table and scan commands."""

from __future__ import annotations

import time

from .errors import TimeBudgetError


class Deadline:
    """Optional wall-clock budget; check() raises once it has passed."""

    def __init__(self, seconds: float | None = None):
        self.seconds = seconds
        self._end = None if seconds is None else time.monotonic() + seconds

    @property
    def expired(self) -> bool:
        return self._end is not None and time.monotonic() > self._end

    def check(self) -> None:
        if self.expired:
            raise TimeBudgetError(f"time budget of {self.seconds}s exceeded")
