"""Inversion of the Dirac equation for the vector potential.

The Dirac equation is taken as (i gamma.d - q gamma.A - m) psi = 0.  The
functions here recover A^mu from a spinor field, form the gauge-invariant
potential B^mu from bilinears alone, and evaluate the full list of
constraints that follow from sandwiching the Dirac equation between
spinors.  Four-vectors are returned with upper indices.
"""
from dataclasses import dataclass

import numpy as np

from .bilinears import (
    SpinorField, antisymmetric_derivatives, bilinear_derivatives, bilinears,
    reconstruct_s,
)
from .differentiation import DiffEngine
from .dirac_algebra import ETA_DIAG, delta_upper, epsilon_upper, lower_index
from .errors import DegenerateDensityError, SupportError

_OUTER = np.multiply.outer(ETA_DIAG, ETA_DIAG)


@dataclass(frozen=True)
class PhysicalParams:
    q: float = 1.0
    mass: float = 0.0

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("charge q must be nonzero")
        if self.mass < 0:
            raise ValueError("mass must be non-negative")


def _engine(engine):
    return engine or DiffEngine()


# ---------------------------------------------------------------------------
# Bilinear fields


class BilinearField:
    """x -> (sigma, omega, j^mu, k^mu) packed as a (..., 10) complex array.

    ``grad(x)``, if supplied, returns the exact first derivatives with shape
    (..., 4, 10), indexed [d_mu, component].
    """

    def __init__(self, value, grad=None):
        self.value = value
        self.grad = grad

    def __call__(self, x):
        return self.value(np.asarray(x, dtype=float))

    def derivative(self, x, engine=None):
        engine = _engine(engine)
        x = np.asarray(x, dtype=float)
        if engine.analytic and self.grad is not None:
            return self.grad(x)
        return DiffEngine("central", engine.h, engine.order).grad(self.value, x)


def pack(sigma, omega, j, k):
    sigma = np.asarray(sigma, dtype=complex)
    omega = np.asarray(omega, dtype=complex)
    return np.concatenate([sigma[..., None], omega[..., None],
                           np.asarray(j, dtype=complex), np.asarray(k, dtype=complex)], axis=-1)


def unpack(v):
    return v[..., 0], v[..., 1], v[..., 2:6], v[..., 6:10]


def bilinear_field_from_spinor(field):
    """The bilinear field (sigma, omega, j, k) of a spinor field."""

    def value(x):
        b = bilinears(field(x), field.rep)
        return pack(b.sigma, b.omega, b.j, b.k)

    grad = None
    if field.grad is not None:
        def grad(x):
            psi = field(x)
            db = bilinear_derivatives(psi, field.grad(x), field.rep)
            return pack(db.sigma, db.omega, db.j, db.k)
    return BilinearField(value, grad)


def constant_bilinear_field(sigma, omega, j, k):
    v = pack(sigma, omega, j, k)

    def value(x):
        return np.broadcast_to(v, np.shape(x)[:-1] + (10,)).copy()

    def grad(x):
        return np.zeros(np.shape(x)[:-1] + (4, 10), dtype=complex)

    return BilinearField(value, grad)


# ---------------------------------------------------------------------------
# Inverted Dirac equation


def _spinor_data(field, x, engine):
    psi = field(x)
    dpsi = field.derivative(x, engine)
    b = bilinears(psi, field.rep)
    db = bilinear_derivatives(psi, dpsi, field.rep)
    anti = antisymmetric_derivatives(psi, dpsi, field.rep)
    return b, db, anti


def _divergence(dt):
    """d_nu T^{mu nu} from dt[..., rho, mu, nu] = d_rho T^{mu nu}."""
    return np.einsum("...nmn->...m", dt)


def _check_support(value, name, tol):
    if np.any(np.abs(value) <= tol):
        raise SupportError(f"{name} vanishes at the evaluation point")


def invert_A_scalar(field, p, x, engine=None, tol=1e-12):
    """A^mu from the scalar-density form of the inverted Dirac equation.

    A^mu = (1/2q) {i[psibar d^mu psi - d^mu psibar psi] + d_nu s^{mu nu}
    - 2 m j^mu} / sigma.  Raises SupportError where sigma vanishes.
    """
    b, db, anti = _spinor_data(field, x, engine)
    _check_support(b.sigma, "sigma", tol)
    num = 1j * ETA_DIAG * anti.sigma + _divergence(db.s) - 2 * p.mass * b.j
    return num / (2 * p.q * b.sigma[..., None])


def invert_A_pseudo(field, p, x, engine=None, tol=1e-12):
    """A^mu from the pseudoscalar form, which carries no mass term.

    A^mu = (1/2q) {i[psibar g5 d^mu psi - d^mu psibar g5 psi]
    + d_nu *s^{mu nu}} / omega.  Raises SupportError where omega vanishes.
    """
    b, db, anti = _spinor_data(field, x, engine)
    _check_support(b.omega, "omega", tol)
    num = 1j * ETA_DIAG * anti.omega + _divergence(db.s_dual)
    return num / (2 * p.q * b.omega[..., None])


def invert_A_combined(field, p, x, engine=None, tol=1e-12):
    """Mean of the scalar and pseudoscalar forms, written as a single expression."""
    b, db, anti = _spinor_data(field, x, engine)
    _check_support(b.sigma, "sigma", tol)
    _check_support(b.omega, "omega", tol)
    sig, om = b.sigma[..., None], b.omega[..., None]
    spin = 1j * ETA_DIAG * (anti.sigma * om + anti.omega * sig) / (sig * om)
    num = spin + _divergence(db.s) / sig + _divergence(db.s_dual) / om - 2 * p.mass * b.j / sig
    return num / (4 * p.q)


def _m_dn(b, db):
    """m^nu d_mu n_nu with the derivative index mu lowered."""
    return np.einsum("...n,...mn->...m", lower_index(b.m), db.n)


def invert_A_tensor(field, p, x, engine=None):
    """A^mu written with bilinears only (m, n, s, *s, sigma, omega, j)."""
    b, db, _ = _spinor_data(field, x, engine)
    d = (b.sigma ** 2 - b.omega ** 2)[..., None]
    num = (ETA_DIAG * _m_dn(b, db) + b.sigma[..., None] * _divergence(db.s)
           - b.omega[..., None] * _divergence(db.s_dual) - 2 * p.mass * b.sigma[..., None] * b.j)
    return num / (2 * p.q * d)


def gauge_dependent_part(field, p, x, engine=None):
    """A^mu - B^mu = (1/2q) m^nu d^mu n_nu / (sigma^2 - omega^2)."""
    b, db, _ = _spinor_data(field, x, engine)
    d = (b.sigma ** 2 - b.omega ** 2)[..., None]
    return ETA_DIAG * _m_dn(b, db) / (2 * p.q * d)


def _bilinear_data(field, x, engine):
    if isinstance(field, SpinorField):
        field = bilinear_field_from_spinor(field)
    v = field(x)
    dv = field.derivative(x, engine)
    return field, unpack(v), unpack(dv)


def consistency_condition(field, p, x, engine=None):
    """Residual of i j^nu d_mu k_nu = 2 m omega j_mu + sigma d_nu *s_mu^nu - omega d_nu s_mu^nu.

    For a spinor field the rank-2 tensors come straight from the spinor;
    for a bilinear field they are rebuilt from (sigma, omega, j, k) and
    differentiated numerically.  Returned with the free index lowered.
    """
    engine = _engine(engine)
    x = np.asarray(x, dtype=float)
    if isinstance(field, SpinorField):
        b, db, _ = _spinor_data(field, x, engine)
        sig, om, j, k = b.sigma, b.omega, b.j, b.k
        dk = db.k
        div_s = _divergence(db.s)
        div_sd = _divergence(db.s_dual)
    else:
        (sig, om, j, k), (_, _, _, dk) = unpack(field(x)), unpack(field.derivative(x, engine))

        def upper_s(y):
            s, sd = reconstruct_s(*unpack(field(y)))
            return np.stack([s * _OUTER, sd * _OUTER], axis=-3)

        ds = engine.outer().grad(upper_s, x)
        div_s = _divergence(ds[..., 0, :, :])
        div_sd = _divergence(ds[..., 1, :, :])
    lhs = 1j * np.einsum("...n,...mn->...m", lower_index(j), dk)
    rhs = (2 * p.mass * om[..., None] * lower_index(j)
           + lower_index(sig[..., None] * div_sd - om[..., None] * div_s))
    return lhs - rhs


def _check_density(d, tol):
    if np.any(np.abs(d) <= tol):
        raise DegenerateDensityError("sigma^2 - omega^2 vanishes at the evaluation point")


def gauge_invariant_B(field, p, x, engine=None, tol=1e-12):
    """B^mu from (sigma, omega, j, k) and their first derivatives only.

    B_mu = (1/2q){eps_mu^{nu rho sig}[D d_nu(j_rho k_sig) - (1/2) j_rho k_sig d_nu D]
    + delta_mu^{nu rho sig}[(d_nu sigma) omega - sigma d_nu omega] j_rho k_sig} / D^2
    - (1/q) m sigma j_mu / D, with D = sigma^2 - omega^2.
    ``field`` may be a BilinearField or a SpinorField.
    """
    engine = _engine(engine)
    x = np.asarray(x, dtype=float)
    _, (sig, om, j, k), (dsig, dom, dj, dk) = _bilinear_data(field, x, engine)
    d = sig ** 2 - om ** 2
    _check_density(d, tol)
    dd = 2 * (sig[..., None] * dsig - om[..., None] * dom)
    jl, kl = lower_index(j), lower_index(k)
    djl, dkl = lower_index(dj), lower_index(dk)
    jk = np.einsum("...r,...s->...rs", jl, kl)
    d_jk = np.einsum("...nr,...s->...nrs", djl, kl) + np.einsum("...r,...ns->...nrs", jl, dkl)
    eps_term = (d[..., None, None, None] * d_jk
                - 0.5 * np.einsum("...rs,...n->...nrs", jk, dd))
    mix = dsig * om[..., None] - sig[..., None] * dom
    delta_term = np.einsum("...n,...rs->...nrs", mix, jk)
    # upper-index B^mu uses epsilon^{mu nu rho sig} and delta^{mu nu rho sig}
    b_upper = (np.einsum("mnrs,...nrs->...m", epsilon_upper(), eps_term)
               + np.einsum("mnrs,...nrs->...m", delta_upper(), delta_term))
    b_upper = b_upper / (2 * p.q * d[..., None] ** 2)
    b_upper = b_upper - p.mass * sig[..., None] * j / (p.q * d[..., None])
    return b_upper


def gauge_invariant_B_sform(field, p, x, engine=None, tol=1e-12):
    """B^mu = (1/2q)(sigma d_nu s^{mu nu} - omega d_nu *s^{mu nu} - 2 m sigma j^mu) / D
    evaluated directly from a spinor field."""
    b, db, _ = _spinor_data(field, x, engine)
    d = b.sigma ** 2 - b.omega ** 2
    _check_density(d, tol)
    sig, om = b.sigma[..., None], b.omega[..., None]
    num = sig * _divergence(db.s) - om * _divergence(db.s_dual) - 2 * p.mass * sig * b.j
    return num / (2 * p.q * d[..., None])


# ---------------------------------------------------------------------------
# Constraint ledger

LEDGER_ENTRIES = (
    "vector_coupling", "vector_continuity", "axial_continuity", "axial_coupling",
    "tensor_coupling", "dual_tensor_coupling", "tensor_pair", "dual_tensor_pair",
    "scalar_inversion", "pseudo_inversion",
)


def bilinearized_constraints(field, potential, p, x, engine=None, tol=1e-12):
    """Residuals of the constraints obtained by sandwiching the Dirac equation.

    ``potential(x)`` returns A^mu (upper index).  Each entry is the maximum
    absolute LHS - RHS over its free indices at the single point x; the two
    rank-2 entries each cover a pair of equations.  The pseudo inversion is
    ``None`` where omega vanishes.
    """
    x = np.asarray(x, dtype=float)
    b, db, anti = _spinor_data(field, x, engine)
    q, m = p.q, p.mass
    a_up = np.asarray(potential(x), dtype=complex)
    a_lo = lower_index(a_up)
    jl, kl = lower_index(b.j), lower_index(b.k)
    res = {}
    # anti.j[rho, sig] = psibar gamma^sig d_rho psi - ...; trace couples d_nu with gamma^nu
    res["vector_coupling"] = a_lo @ b.j - (1j / (2 * q) * np.trace(anti.j) - m * b.sigma / q)
    res["vector_continuity"] = np.trace(db.j)
    res["axial_continuity"] = np.trace(db.k) + 2j * m * b.omega
    res["axial_coupling"] = a_lo @ b.k - 1j / (2 * q) * np.trace(anti.k)
    # s_mu^nu A_nu: lower mu of s^{mu nu}
    s_mix = ETA_DIAG[:, None] * b.s
    sd_mix = ETA_DIAG[:, None] * b.s_dual
    anti_s = ETA_DIAG * np.einsum("nmn->m", anti.s)
    anti_sd = ETA_DIAG * np.einsum("nmn->m", anti.s_dual)
    res["tensor_coupling"] = s_mix @ a_lo - (1j / (2 * q) * anti_s - db.sigma / (2 * q))
    res["dual_tensor_coupling"] = sd_mix @ a_lo - (
        1j / (2 * q) * anti_sd - db.omega / (2 * q) - 1j * m * kl / q)
    eps_mix = _OUTER[:, :, None, None] * epsilon_upper()
    del_mix = _OUTER[:, :, None, None] * delta_upper()
    anti_jl = lower_index(anti.j)      # [rho, sig] with sig lowered
    anti_kl = lower_index(anti.k)
    djl, dkl = lower_index(db.j), lower_index(db.k)
    s_lo = b.s * _OUTER
    sd_lo = b.s_dual * _OUTER

    def c2(sym, t):
        return np.einsum("mnrs,rs->mn", sym, t)

    a_j = np.outer(a_lo, jl)
    a_k = np.outer(a_lo, kl)
    t1 = c2(del_mix, a_j) - (1j * c2(del_mix, anti_jl) - 1j * c2(eps_mix, dkl)) / (2 * q)
    t2 = c2(eps_mix, a_k) - (1j * c2(eps_mix, anti_kl) - 1j * c2(del_mix, djl) - 2 * m * s_lo) / (2 * q)
    t3 = c2(eps_mix, a_j) - (1j * c2(eps_mix, anti_jl) - 1j * c2(del_mix, dkl)) / (2 * q)
    t4 = c2(del_mix, a_k) - (1j * c2(del_mix, anti_kl) - 1j * c2(eps_mix, djl) + 2 * m * sd_lo) / (2 * q)
    res["tensor_pair"] = np.concatenate([t1.ravel(), t2.ravel()])
    res["dual_tensor_pair"] = np.concatenate([t3.ravel(), t4.ravel()])
    res["scalar_inversion"] = a_up - invert_A_scalar(field, p, x, engine, tol)
    try:
        res["pseudo_inversion"] = a_up - invert_A_pseudo(field, p, x, engine, tol)
    except SupportError:
        res["pseudo_inversion"] = None
    return {k: (None if v is None else float(np.max(np.abs(v)))) for k, v in res.items()}
