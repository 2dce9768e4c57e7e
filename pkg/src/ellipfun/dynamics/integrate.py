"""Fixed-step classical Runge-Kutta integrator used as the reference oracle."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from ..errors import DomainError, NonFiniteState


@dataclass
class Trajectory:
    """Uniformly sampled states, plus any conserved quantities tracked along the way.

    ``states`` has shape (n_samples, dim) or, for batched runs,
    (n_samples, dim, batch).
    """

    times: np.ndarray
    states: np.ndarray
    conserved: dict = field(default_factory=dict)
    labels: Sequence[str] | None = None

    def drift(self) -> dict:
        """Largest |q(t) - q(0)| for every conserved quantity."""
        return {name: float(np.max(np.abs(v - v[0]))) for name, v in self.conserved.items()}

    def _columns(self):
        dim = self.states.shape[1]
        labels = list(self.labels) if self.labels is not None else [f"s{i}" for i in range(dim)]
        cols = {"t": self.times}
        if self.states.ndim == 2:
            for i, name in enumerate(labels):
                cols[name] = self.states[:, i]
            for name, v in self.conserved.items():
                cols[name] = v
        else:
            for b in range(self.states.shape[2]):
                for i, name in enumerate(labels):
                    cols[f"{name}[{b}]"] = self.states[:, i, b]
                for name, v in self.conserved.items():
                    cols[f"{name}[{b}]"] = v[:, b]
        return cols

    def to_csv(self) -> str:
        cols = self._columns()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols.keys())
        for row in zip(*cols.values()):
            w.writerow(repr(float(x)) for x in row)
        return buf.getvalue()

    def to_json(self) -> str:
        cols = self._columns()
        return json.dumps({k: [float(x) for x in v] for k, v in cols.items()})


def rk4_step(field: Callable, s: np.ndarray, dt: float) -> np.ndarray:
    k1 = field(s)
    k2 = field(s + 0.5 * dt * k1)
    k3 = field(s + 0.5 * dt * k2)
    k4 = field(s + dt * k3)
    return s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_integrate(
    field: Callable,
    s0,
    dt: float,
    steps: int,
    conserved: Mapping[str, Callable] | None = None,
    record_every: int = 1,
    labels: Sequence[str] | None = None,
) -> Trajectory:
    """Integrate ds/dt = field(s) with ``steps`` RK4 steps of size ``dt``.

    ``s0`` may carry a trailing batch axis; ``field`` must then act
    column-wise. ``conserved`` maps names to functions of the state, which
    are recorded at every stored sample.
    """
    if not dt > 0:
        raise DomainError(f"dt must be positive, got {dt!r}")
    if int(steps) != steps or steps < 1:
        raise DomainError(f"steps must be a positive integer, got {steps!r}")
    steps = int(steps)
    s = np.array(s0, dtype=float)
    n_rec = steps // record_every + 1
    states = np.empty((n_rec,) + s.shape)
    times = np.arange(n_rec) * (dt * record_every)
    states[0] = s
    j = 1
    for i in range(1, steps + 1):
        s = rk4_step(field, s, dt)
        # NaN and inf propagate, so a periodic check is enough
        if (i % 256 == 0 or i == steps) and not np.all(np.isfinite(s)):
            raise NonFiniteState(f"state became non-finite by t = {i * dt!r}")
        if i % record_every == 0:
            states[j] = s
            j += 1
    cons = {}
    cols = np.moveaxis(states, 0, -1)
    for name, fn in (conserved or {}).items():
        # try the vectorized call over all samples first
        try:
            v = np.asarray(fn(cols), dtype=float)
            v = np.moveaxis(v, -1, 0) if v.ndim else None
        except (TypeError, ValueError, IndexError):
            v = None
        if v is None or v.shape[0] != n_rec:
            v = np.asarray([fn(x) for x in states], dtype=float)
        cons[name] = v
    return Trajectory(times, states, cons, labels)
