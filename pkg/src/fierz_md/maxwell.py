"""Gauge-invariant field strength, Maxwell residual and continuity residuals.

F_{mu nu} is assembled from the gauge-invariant potential B and a
rational term in (sigma, omega, j, k); no gauge-dependent quantity is
consumed.  Derivatives of B and of F are taken by central differences,
with the step doubling at every nested layer (see DiffEngine.outer).
"""
import numpy as np

from .differentiation import DEFAULT_ENGINE, DiffEngine
from .dirac_algebra import ETA_DIAG, epsilon_upper, lower_index
from .inversion import BilinearField, bilinear_field_from_spinor, gauge_invariant_B, unpack
from .bilinears import SpinorField

__all__ = ["DiffEngine", "field_strength", "maxwell_residual", "continuity_residuals",
           "spin_plane_term"]

_OUTER = np.multiply.outer(ETA_DIAG, ETA_DIAG)


def _as_bilinear_field(field):
    if isinstance(field, SpinorField):
        return bilinear_field_from_spinor(field)
    return field


def spin_plane_term(field, p, x, engine=None):
    """(1/2q) eps^{s r k t} j_k k_t [(d_mu j_s)(d_nu j_r) - (d_mu k_s)(d_nu k_r)] / D^2."""
    engine = engine or DEFAULT_ENGINE
    sig, om, j, k = unpack(field(x))
    _, _, dj, dk = unpack(field.derivative(x, engine))
    d = sig ** 2 - om ** 2
    djl, dkl = lower_index(dj), lower_index(dk)
    w = np.einsum("srkt,...k,...t->...sr", epsilon_upper(), lower_index(j), lower_index(k))
    quad = (np.einsum("...ms,...nr->...mnsr", djl, djl)
            - np.einsum("...ms,...nr->...mnsr", dkl, dkl))
    return np.einsum("...sr,...mnsr->...mn", w, quad) / (2 * p.q * d[..., None, None] ** 2)


def field_strength(field, p, x, engine=None):
    """F_{mu nu} (both indices lowered) of a bilinear or spinor field.

    The curl of B is differenced numerically; the result is real and
    antisymmetric by construction.
    """
    engine = engine or DEFAULT_ENGINE
    field = _as_bilinear_field(field)
    x = np.asarray(x, dtype=float)

    def b_lower(y):
        return lower_index(gauge_invariant_B(field, p, y, engine))

    db = engine.outer().grad(b_lower, x)            # [..., mu, nu] = d_mu B_nu
    f = db - np.swapaxes(db, -1, -2) + spin_plane_term(field, p, x, engine)
    f = f.real
    return 0.5 * (f - np.swapaxes(f, -1, -2))


def maxwell_residual(field, p, x, engine=None):
    """d_nu F^{nu mu} - q j^mu, with F differenced once more."""
    engine = engine or DEFAULT_ENGINE
    field = _as_bilinear_field(field)
    x = np.asarray(x, dtype=float)

    def f_upper(y):
        return field_strength(field, p, y, engine) * _OUTER

    df = engine.outer().outer().grad(f_upper, x)    # [..., rho, nu, mu] = d_rho F^{nu mu}
    div = np.einsum("...nnm->...m", df)
    _, _, j, _ = unpack(field(x))
    return div - p.q * j.real


def continuity_residuals(field, p, x, engine=None):
    """(d_mu j^mu, d_mu k^mu + 2 i m omega)."""
    engine = engine or DEFAULT_ENGINE
    field = _as_bilinear_field(field)
    x = np.asarray(x, dtype=float)
    _, om, _, _ = unpack(field(x))
    _, _, dj, dk = unpack(field.derivative(x, engine))
    vec = np.einsum("...mm->...", dj)
    ax = np.einsum("...mm->...", dk) + 2j * p.mass * om
    return vec, ax
