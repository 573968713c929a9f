"""Time grids and sampled signals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class TimeGrid:
    """Strictly increasing, finite, non-negative sample times."""

    times: np.ndarray

    def __post_init__(self):
        times = np.array(self.times, dtype=float).ravel()
        if times.size == 0:
            raise DomainError("a time grid needs at least one point")
        if not np.all(np.isfinite(times)) or times[0] < 0.0:
            raise DomainError("grid times must be finite and >= 0")
        if np.any(np.diff(times) <= 0.0):
            raise DomainError("grid times must be strictly increasing")
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    def __len__(self):
        return self.times.size

    @classmethod
    def linear(cls, start: float, stop: float, points: int) -> "TimeGrid":
        return cls(np.linspace(start, stop, points))

    @classmethod
    def geometric(cls, start: float, stop: float, points: int) -> "TimeGrid":
        if start <= 0.0:
            raise DomainError("a geometric grid needs start > 0")
        return cls(np.geomspace(start, stop, points))


@dataclass(frozen=True)
class SignalTrace:
    grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float).ravel()
        if values.size != len(self.grid):
            raise DomainError(
                f"trace has {values.size} values for a grid of {len(self.grid)} times"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def times(self) -> np.ndarray:
        return self.grid.times

    def __len__(self):
        return self.values.size
