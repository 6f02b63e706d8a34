import time
from contextlib import contextmanager

import numpy as np
import pytest

from fierz_md.bilinears import SpinorField, plane_wave_field, random_plane_wave_modes
from fierz_md.inversion import PhysicalParams


def make_gauged_plane_wave(seed, mixed=True):
    """Exact Dirac solution in a random constant potential.

    Returns (field, a, params).  ``mixed`` superposes a positive- and a
    negative-energy mode so that omega is nonzero.
    """
    rng = np.random.default_rng(seed)
    mass, q = rng.uniform(0.5, 1.5), rng.uniform(0.5, 2.0)
    a = rng.uniform(-1, 1, 4)
    modes = random_plane_wave_modes(rng, mass, 1, 1 if mixed else 0)
    return plane_wave_field(modes, a=a, q=q), a, PhysicalParams(q=q, mass=mass)


def make_polynomial_spinor_field(seed):
    """A smooth spinor field that does not solve the Dirac equation."""
    rng = np.random.default_rng(seed)
    u = rng.normal(size=4) + 1j * rng.normal(size=4)
    v = 0.3 * (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    w = 0.1 * (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    return SpinorField(lambda x: u + x @ v + (x ** 2) @ w,
                       lambda x: v + 2 * x[..., :, None] * w)


def polynomial_gauge(seed):
    """Random cubic gauge function theta(x) with its gradient (lower index)."""
    rng = np.random.default_rng(seed)
    c1 = rng.uniform(-0.5, 0.5, 4)
    c2 = rng.uniform(-0.3, 0.3, (4, 4))
    c2 = c2 + c2.T
    c3 = rng.uniform(-0.1, 0.1, 4)

    def theta(x):
        return x @ c1 + 0.5 * np.einsum("...i,ij,...j->...", x, c2, x) + (x ** 3) @ c3

    def grad(x):
        return c1 + x @ c2 + 3 * (x ** 2) * c3

    return theta, grad


@pytest.fixture
def gauged_plane_wave():
    return make_gauged_plane_wave(11)


# ---------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

ACCEPTANCE_LINES = []


@contextmanager
def criterion(number, title, budget=None):
    """Time a criterion, record its PASS/FAIL line and enforce the runtime budget.

    The yielded dict collects short ``key: value`` details for the line.
    """
    details = {}
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield details
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed > budget:
            details["over budget"] = f"{elapsed:.1f}s > {budget:g}s"
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, budget {budget:g}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        info = ", ".join(f"{k}={v}" for k, v in details.items())
        line = f"criterion {number:>2} {status}  {title}  [{elapsed:.1f}s]  {info}"
        ACCEPTANCE_LINES.append((number, line))
        print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
