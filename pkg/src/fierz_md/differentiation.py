"""Central-difference differentiation over spacetime points.

All evaluation functions in this package accept a batch of points with
shape (..., 4).  A stencil therefore becomes one extra batch axis, so a
whole derivative costs a single vectorized call of the function.
"""
from dataclasses import dataclass, replace

import numpy as np

# offsets and weights of central first-derivative stencils, per unit step
_STENCILS = {
    2: (np.array([-1.0, 1.0]), np.array([-0.5, 0.5])),
    4: (np.array([-2.0, -1.0, 1.0, 2.0]), np.array([1.0, -8.0, 8.0, -1.0]) / 12.0),
}


@dataclass(frozen=True)
class DiffEngine:
    """How derivatives are obtained.

    ``mode`` is ``"analytic"`` (use derivatives supplied by the field and
    fall back to central differences for anything built on top of them)
    or ``"central"`` (difference everything).  ``h`` is the innermost step;
    every further nested layer of differencing doubles it.
    """
    mode: str = "analytic"
    h: float = 1e-3
    order: int = 4

    def __post_init__(self):
        if self.mode not in ("analytic", "central"):
            raise ValueError(f"unknown differentiation mode {self.mode!r}")
        if self.order not in _STENCILS:
            raise ValueError("order must be 2 or 4")
        if not self.h > 0:
            raise ValueError("step h must be positive")

    @property
    def analytic(self):
        return self.mode == "analytic"

    def outer(self):
        """Engine for the next numerical layer on top of this one.

        In analytic mode the first numerical layer uses h itself; in
        central mode the step doubles.
        """
        if self.analytic:
            return replace(self, mode="central")
        return replace(self, h=2 * self.h)

    def grad(self, f, x):
        """Return d[..., mu, ...] = d f / d x^mu at the points x.

        ``f`` maps (..., 4) to (..., *shape); the result has shape
        (..., 4, *shape) with the derivative axis right after the batch.
        """
        x = np.asarray(x, dtype=float)
        offsets, weights = _STENCILS[self.order]
        # points: (..., S, 4 directions, 4 coordinates)
        steps = np.einsum("s,mc->smc", offsets * self.h, np.eye(4))
        pts = x[..., None, None, :] + steps
        vals = f(pts)
        batch = x.ndim - 1
        w = weights / self.h
        return np.tensordot(w, np.moveaxis(vals, batch, 0), axes=(0, 0))

    def directional(self, f, x, v):
        """Derivative of f along the vector field v(x) (same shape as x)."""
        x = np.asarray(x, dtype=float)
        v = np.asarray(v, dtype=float)
        offsets, weights = _STENCILS[self.order]
        pts = x[..., None, :] + np.multiply.outer(offsets * self.h, np.ones(4)) * v[..., None, :]
        vals = f(pts)
        batch = x.ndim - 1
        return np.tensordot(weights / self.h, np.moveaxis(vals, batch, 0), axes=(0, 0))


DEFAULT_ENGINE = DiffEngine()


def partial(f, x, engine=None):
    """Convenience wrapper: central-difference gradient with the given engine."""
    engine = engine or DiffEngine(mode="central")
    return engine.grad(f, x)
