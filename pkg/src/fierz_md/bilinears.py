"""Spinor bilinears, charge conjugation and the Fierz identities they obey.

Conventions: psibar = psi^dagger gamma^0, the pseudoscalar omega =
psibar gamma5 psi is kept purely imaginary, vectors carry upper indices.
All functions broadcast over leading batch axes of the spinor arrays.
"""
from dataclasses import dataclass, fields

import numpy as np

from .dirac_algebra import (
    DIRAC, ETA, ETA_DIAG, delta_upper, epsilon_lower, epsilon_upper, lower_index,
    minkowski_dot, sigma_all,
)
from .differentiation import DiffEngine
from .errors import DegenerateDensityError


def _rep(rep):
    return DIRAC if rep is None else rep


def dirac_adjoint(psi, rep=None):
    """psibar = psi^dagger gamma^0 (as a row, same shape as psi)."""
    return np.einsum("...a,ab->...b", np.conj(psi), _rep(rep).gammas[0])


def charge_conjugate(psi, rep=None):
    """psi^c = C psibar^T with C = i gamma^2 gamma^0."""
    r = _rep(rep)
    return np.einsum("ab,...b->...a", r.cmat, dirac_adjoint(psi, r))


@dataclass
class BilinearSet:
    """The bilinear covariants of one spinor (or a batch of spinors)."""
    sigma: np.ndarray
    omega: np.ndarray
    j: np.ndarray
    k: np.ndarray
    s: np.ndarray
    s_dual: np.ndarray
    m: np.ndarray
    n: np.ndarray

    @property
    def varpi(self):
        """The real pseudoscalar i*omega."""
        return (1j * self.omega).real

    @property
    def density(self):
        """sigma^2 - omega^2, real and non-negative for genuine spinors."""
        return (self.sigma ** 2 - self.omega ** 2).real

    def map(self, func):
        return BilinearSet(**{f.name: func(getattr(self, f.name)) for f in fields(self)})


def _sandwich_set(left_bar, right, rep):
    """psibar-like row times each Dirac structure times a column spinor."""
    r = _rep(rep)
    g, g5 = r.gammas, r.g5
    sig = sigma_all(r)
    sigma = np.einsum("...a,...a->...", left_bar, right)
    omega = np.einsum("...a,ab,...b->...", left_bar, g5, right)
    j = np.einsum("...a,mab,...b->...m", left_bar, g, right)
    k = np.einsum("...a,mab,...b->...m", left_bar, np.einsum("ab,mbc->mac", g5, g), right)
    s = np.einsum("...a,mnab,...b->...mn", left_bar, sig, right)
    sd = np.einsum("...a,mnab,...b->...mn", left_bar, np.einsum("ab,mnbc->mnac", g5, sig), right)
    return sigma, omega, j, k, s, sd


def bilinears(psi, rep=None):
    """Compute sigma, omega, j, k, s, *s, m and n for the spinor(s) psi."""
    psi = np.asarray(psi, dtype=complex)
    r = _rep(rep)
    sigma, omega, j, k, s, sd = _sandwich_set(dirac_adjoint(psi, r), psi, r)
    mn = np.einsum("...a,mab,...b->...m", dirac_adjoint(charge_conjugate(psi, r), r), r.gammas, psi)
    return BilinearSet(sigma, omega, j.real, k.real, s, sd, mn.real, mn.imag)


def bilinear_derivatives(psi, dpsi, rep=None):
    """First derivatives of all bilinears from psi and dpsi[..., mu, a].

    Each entry of the returned set carries the derivative index mu right
    after the batch axes, e.g. ``j[..., mu, nu] = d_mu j^nu``.
    """
    psi = np.asarray(psi, dtype=complex)
    dpsi = np.asarray(dpsi, dtype=complex)
    r = _rep(rep)
    p = psi[..., None, :]
    a = _sandwich_set(dirac_adjoint(dpsi, r), p, r)
    b = _sandwich_set(dirac_adjoint(p, r), dpsi, r)
    sigma, omega, j, k, s, sd = (u + v for u, v in zip(a, b))
    cmat = r.cmat
    pc = charge_conjugate(p, r)
    dpc = np.einsum("ab,...b->...a", cmat, dirac_adjoint(dpsi, r))
    mn = (np.einsum("...a,mab,...b->...m", dirac_adjoint(dpc, r), r.gammas, p)
          + np.einsum("...a,mab,...b->...m", dirac_adjoint(pc, r), r.gammas, dpsi))
    return BilinearSet(sigma, omega, j.real, k.real, s, sd, mn.real, mn.imag)


def antisymmetric_derivatives(psi, dpsi, rep=None):
    """psibar G (d_mu psi) - (d_mu psibar) G psi for every Dirac structure G.

    Only sigma, omega, j, k, s and *s entries are meaningful; m and n are
    left as zeros.  The derivative index is the axis after the batch.
    """
    psi = np.asarray(psi, dtype=complex)
    dpsi = np.asarray(dpsi, dtype=complex)
    r = _rep(rep)
    p = psi[..., None, :]
    a = _sandwich_set(dirac_adjoint(p, r), dpsi, r)
    b = _sandwich_set(dirac_adjoint(dpsi, r), p, r)
    sigma, omega, j, k, s, sd = (u - v for u, v in zip(a, b))
    zero = np.zeros(j.shape)
    return BilinearSet(sigma, omega, j, k, s, sd, zero, zero)


# ---------------------------------------------------------------------------
# Fierz identities

FIERZ_CLASSES = ("inner_jk", "inner_mn", "orthogonality", "spin_plane",
                 "s_reconstruction", "sdual_reconstruction")


def reconstruct_s(sigma, omega, j, k):
    """s_{mu nu} and *s_{mu nu} (all indices lowered) from sigma, omega, j, k."""
    d = sigma ** 2 - omega ** 2
    jl, kl = lower_index(j), lower_index(k)
    jk = np.einsum("...r,...s->...rs", jl, kl)
    # epsilon_{mu nu}^{rho sig} and delta_{mu nu}^{rho sig}
    eps_mixed = np.einsum("m,n,mnrs->mnrs", ETA_DIAG, ETA_DIAG, epsilon_upper())
    del_mixed = np.einsum("m,n,mnrs->mnrs", ETA_DIAG, ETA_DIAG, delta_upper())
    e_jk = np.einsum("mnrs,...rs->...mn", eps_mixed, jk)
    d_jk = np.einsum("mnrs,...rs->...mn", del_mixed, jk)
    sig = np.asarray(sigma)[..., None, None]
    om = np.asarray(omega)[..., None, None]
    dd = np.asarray(d)[..., None, None]
    return (sig * e_jk - om * d_jk) / dd, (om * e_jk - sig * d_jk) / dd


def _lower2(t):
    return t * np.multiply.outer(ETA_DIAG, ETA_DIAG)


def fierz_residuals(b, min_density=1e-12):
    """Normalized residuals of the six Fierz identity classes.

    Residuals are divided by the natural scale of each identity, built
    from (j^0)^2 = (psi^dagger psi)^2.  The two reconstruction entries are
    ``None`` when sigma^2 - omega^2 is below ``min_density`` times that
    scale, since their formulas divide by it.
    Works on a single BilinearSet; batches return the worst entry.
    """
    scale = np.maximum(1.0, np.abs(b.j[..., 0]) ** 2)
    d = b.sigma ** 2 - b.omega ** 2
    jj, kk = minkowski_dot(b.j, b.j), minkowski_dot(b.k, b.k)
    mm, nn = minkowski_dot(b.m, b.m), minkowski_dot(b.n, b.n)
    inner_jk = np.maximum(np.abs(jj - d), np.abs(kk + d)) / scale
    inner_mn = np.maximum(np.abs(mm + d), np.abs(nn + d)) / scale
    vecs = (b.j, b.k, b.m, b.n)
    orth = np.max([np.abs(minkowski_dot(u, v)) for i, u in enumerate(vecs) for v in vecs[i + 1:]],
                  axis=0) / scale
    lhs = np.einsum("mnrs,...r,...s->...mn", epsilon_lower(), b.j, b.k)
    ml, nl = lower_index(b.m), lower_index(b.n)
    rhs = np.einsum("...m,...n->...mn", ml, nl) - np.einsum("...n,...m->...mn", ml, nl)
    spin = np.max(np.abs(lhs - rhs), axis=(-1, -2)) / scale
    out = {
        "inner_jk": float(np.max(inner_jk)),
        "inner_mn": float(np.max(inner_mn)),
        "orthogonality": float(np.max(orth)),
        "spin_plane": float(np.max(spin)),
    }
    degenerate = np.abs(d) < min_density * scale
    if np.any(degenerate):
        out["s_reconstruction"] = None
        out["sdual_reconstruction"] = None
    else:
        s_rec, sd_rec = reconstruct_s(b.sigma, b.omega, b.j, b.k)
        root = np.sqrt(scale)[..., None, None]
        out["s_reconstruction"] = float(np.max(np.abs(_lower2(b.s) - s_rec) / root))
        out["sdual_reconstruction"] = float(np.max(np.abs(_lower2(b.s_dual) - sd_rec) / root))
    return out


def tetrad(b):
    """The tetrad t^mu_alpha = [j, m, n, k] / sqrt(sigma^2 - omega^2).

    Returns ``(t, residual)`` where residual is the worse of the two
    contraction identities (eta t^T eta) t = I and t (eta t^T eta) = I.
    """
    d = float(np.real(b.sigma ** 2 - b.omega ** 2))
    if not d > 0:
        raise DegenerateDensityError("tetrad needs sigma^2 - omega^2 > 0")
    t = np.column_stack([b.j, b.m, b.n, b.k]) / np.sqrt(d)
    inv = ETA @ t.T @ ETA
    res = max(np.max(np.abs(inv @ t - np.eye(4))), np.max(np.abs(t @ inv - np.eye(4))))
    return t, float(res)


# ---------------------------------------------------------------------------
# Spinor fields


class SpinorField:
    """A spinor-valued function of spacetime with optional exact gradient.

    ``value(x)`` maps points (..., 4) to spinors (..., 4).  ``grad(x)``, if
    given, returns d_mu psi with shape (..., 4, 4) indexed [mu, component].
    """

    def __init__(self, value, grad=None, rep=None):
        self.value = value
        self.grad = grad
        self.rep = rep

    def __call__(self, x):
        return self.value(np.asarray(x, dtype=float))

    def derivative(self, x, engine=None):
        engine = engine or DiffEngine()
        x = np.asarray(x, dtype=float)
        if engine.analytic and self.grad is not None:
            return self.grad(x)
        return DiffEngine("central", engine.h, engine.order).grad(self.value, x)

    def bilinears(self, x):
        return bilinears(self(x), self.rep)


def on_shell_spinor(p, mass, seed_spinor, negative_energy=False, rep=None):
    """Project a spinor onto the positive (or negative) energy solutions.

    Uses (gamma.p + m)/2m, or (m - gamma.p)/2m for negative energy, with
    gamma.p = gamma^mu p_mu, then normalizes to unit length.
    """
    r = _rep(rep)
    pl = lower_index(np.asarray(p, dtype=float))
    slash = np.einsum("m,mab->ab", pl, r.gammas)
    sign = -1.0 if negative_energy else 1.0
    proj = (sign * slash + mass * np.eye(4)) / (2 * mass)
    u = proj @ np.asarray(seed_spinor, dtype=complex)
    return u / np.linalg.norm(u)


def on_shell_momentum(p_spatial, mass):
    p3 = np.asarray(p_spatial, dtype=float)
    return np.concatenate([[np.sqrt(mass ** 2 + p3 @ p3)], p3])


def plane_wave_field(modes, a=(0.0, 0.0, 0.0, 0.0), q=1.0, rep=None):
    """Superposition of plane waves in a constant potential a^mu.

    ``modes`` is a list of (amplitude, p^mu, u, sign): each term is
    amplitude * exp(-i sign p.x) u.  The whole sum is multiplied by
    exp(-i q a.x), so if each mode solves the free Dirac equation the
    field solves it with constant potential A^mu = a^mu.
    """
    a_low = lower_index(np.asarray(a, dtype=float))
    terms = []
    for amp, p, u, sign in modes:
        terms.append((complex(amp), sign * lower_index(np.asarray(p, dtype=float)),
                      np.asarray(u, dtype=complex)))
    k_shift = q * a_low

    def phases(x):
        return [amp * np.exp(-1j * (x @ (kl + k_shift))) for amp, kl, _ in terms]

    def value(x):
        return sum(ph[..., None] * u for ph, (_, _, u) in zip(phases(x), terms))

    def grad(x):
        out = 0
        for ph, (_, kl, u) in zip(phases(x), terms):
            kk = -1j * (kl + k_shift)
            out = out + np.einsum("...,m,a->...ma", ph, kk, u)
        return out

    return SpinorField(value, grad, rep)


def gauge_transform(field, theta, grad_theta, q=1.0):
    """psi -> exp(i q theta) psi; the potential shifts as A_mu -> A_mu - d_mu theta."""

    def value(x):
        return np.exp(1j * q * theta(x))[..., None] * field.value(x)

    def grad(x):
        ph = np.exp(1j * q * theta(x))
        psi = field.value(x)
        dpsi = field.derivative(x)
        dth = grad_theta(x)
        return ph[..., None, None] * (1j * q * dth[..., :, None] * psi[..., None, :] + dpsi)

    return SpinorField(value, grad, field.rep)


# ---------------------------------------------------------------------------
# Derivative identities


def derivative_identities(field, x, engine=None, min_density=1e-10):
    """Residuals of the first-derivative Fierz identities at a point.

    Classes: ``j_dk`` (j.d k = -k.d j and its spinor form), ``m_dn``
    (m.d n = -n.d m and its spinor form), ``replacement`` (the two rules
    that express the spinor antisymmetric derivatives through j.dk and
    m.dn; ``None`` when sigma^2 - omega^2 is too small),
    ``tetrad_derivative`` (antisymmetry of t^nu_a d t_{nu b}) and
    ``self_derivative`` (x.dx identities for j, m, n, k).
    """
    x = np.asarray(x, dtype=float)
    rep = field.rep
    psi = field(x)
    dpsi = field.derivative(x, engine)
    b = bilinears(psi, rep)
    db = bilinear_derivatives(psi, dpsi, rep)
    anti = antisymmetric_derivatives(psi, dpsi, rep)
    sig, om = b.sigma, b.omega
    sp, s5p = anti.sigma, anti.omega  # spinor antisymmetric derivatives, index mu

    def contract(v, dv):
        # v^nu d_mu v'_nu over the last axis, mu from dv's derivative axis
        return np.einsum("...n,...mn->...m", lower_index(v), dv)

    j_dk = contract(b.j, db.k)
    k_dj = contract(b.k, db.j)
    m_dn = contract(b.m, db.n)
    n_dm = contract(b.n, db.m)
    res = {}
    res["j_dk"] = float(np.max(np.abs(np.concatenate([
        j_dk + k_dj, j_dk - (sp * om - s5p * sig)]))))
    res["m_dn"] = float(np.max(np.abs(np.concatenate([
        m_dn + n_dm, m_dn - 1j * (sp * sig - s5p * om)]))))
    d = sig ** 2 - om ** 2
    if abs(d) < min_density:
        res["replacement"] = None
    else:
        r1 = sp + (j_dk * om + 1j * m_dn * sig) / d
        r2 = s5p + (j_dk * sig + 1j * m_dn * om) / d
        res["replacement"] = float(np.max(np.abs(np.concatenate([r1, r2]))))
    dd = db.sigma * sig - db.omega * om
    res["self_derivative"] = float(np.max(np.abs(np.concatenate([
        contract(b.j, db.j) - dd, contract(b.m, db.m) + dd,
        contract(b.n, db.n) + dd, contract(b.k, db.k) + dd]))))
    if d.real > min_density:
        t = np.column_stack([b.j, b.m, b.n, b.k]) / np.sqrt(d.real)
        # d_mu t = d_mu[j, m, n, k] / sqrt(d) - (d_mu d / 2d) t
        cols = np.stack([db.j, db.m, db.n, db.k], axis=-1)  # [mu, nu, alpha]
        dt = cols / np.sqrt(d.real) - (dd.real / d.real)[:, None, None] * t[None, :, :]
        tl = lower_index(t, axis=0)
        prod = np.einsum("na,mnb->mab", tl, dt)
        res["tetrad_derivative"] = float(np.max(np.abs(prod + prod.swapaxes(1, 2))))
    else:
        res["tetrad_derivative"] = None
    return res


def random_plane_wave_modes(rng, mass, n_positive=1, n_negative=1, p_scale=1.0, rep=None):
    """Random on-shell modes for ``plane_wave_field``.

    A single on-shell mode has omega = 0 identically; mixing positive- and
    negative-energy modes gives a field whose omega is nonzero almost
    everywhere.
    """
    rng = np.random.default_rng(rng)
    modes = []
    for negative in [False] * n_positive + [True] * n_negative:
        p = on_shell_momentum(rng.uniform(-p_scale, p_scale, 3), mass)
        seed = rng.normal(size=4) + 1j * rng.normal(size=4)
        u = on_shell_spinor(p, mass, seed, negative_energy=negative, rep=rep)
        amp = rng.uniform(0.5, 1.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        modes.append((amp, p, u, -1.0 if negative else 1.0))
    return modes
