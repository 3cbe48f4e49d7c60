"""Tensor allocation accounting.

Counts payload bytes of arrays created through the package's factories so a
run can report its peak working set.  Only tensor payloads are counted, not
Python object overhead; releases are detected with weakref finalizers, which
under CPython's refcounting fire as soon as the last reference drops.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AllocStats:
    current_bytes: int
    peak_bytes: int


class Tracker:
    """Process-wide current/peak byte counter for tracked arrays."""

    def __init__(self):
        self._lock = threading.Lock()
        self._current = 0
        self._peak = 0
        self._seen: weakref.WeakSet = weakref.WeakSet()

    def track(self, arr: np.ndarray) -> np.ndarray:
        """Register `arr`; idempotent so wrappers may re-track safely."""
        with self._lock:
            if arr in self._seen:
                return arr
            self._seen.add(arr)
            self._current += arr.nbytes
            if self._current > self._peak:
                self._peak = self._current
        weakref.finalize(arr, self._release, arr.nbytes)
        return arr

    def _release(self, nbytes: int):
        with self._lock:
            self._current -= nbytes

    def stats(self) -> AllocStats:
        with self._lock:
            return AllocStats(self._current, self._peak)

    def reset_peak(self):
        with self._lock:
            self._peak = self._current


class _Measurement:
    def __init__(self, tracker: Tracker):
        self._tracker = tracker
        self.peak_bytes = 0

    def __enter__(self):
        self._tracker.reset_peak()
        return self

    def __exit__(self, *exc):
        self.peak_bytes = self._tracker.stats().peak_bytes
        return False


tracker = Tracker()


def measure() -> _Measurement:
    """Context manager scoping a peak-memory measurement to a block."""
    return _Measurement(tracker)
