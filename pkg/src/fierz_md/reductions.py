"""Symmetry-reduced Maxwell-Dirac systems.

Four reductions are covered:

* spherical (rotations about the origin), profiles of (t, r);
* cylindrical (rotations about and translations along z), profiles of (t, rho);
* the screw group, whose only solution is the trivial one;
* the non-splitting group generated by B_2 + lambda X_2, X_1, X_3, X_4,
  whose solutions are constants obeying a single algebraic equation.

Reduced profiles are sympy expressions in (t, s), where s is r or rho, so
all derivatives up to third order are exact.  Omega is purely imaginary; a
profile stores its imaginary part w (omega = i w) and the closed forms are
evaluated with complex arithmetic, returning the real part.

Every closed form can be cross-checked against the ambient pipeline
(inversion.gauge_invariant_B -> maxwell.field_strength ->
maxwell.maxwell_residual) by lifting the profile to a 4D BilinearField with
``lift``.
"""
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

import numpy as np
import sympy as sp

from ._reduced_formulas import EXPRESSIONS
from .differentiation import DiffEngine
from .errors import DegenerateDensityError, DomainError, InfeasibleError
from .inversion import BilinearField, PhysicalParams, pack
from .maxwell import continuity_residuals, field_strength, maxwell_residual

__all__ = [
    "T", "S", "term_list", "evaluate_expression", "ReducedProfile", "SphericalProfile",
    "CylindricalProfile", "consistent_spherical_profile", "random_spherical_profile",
    "random_cylindrical_profile", "consistent_cylindrical_profile", "spherical_k_from_j", "spherical_B", "spherical_F",
    "spherical_F_from_B", "spherical_field_tensor", "spherical_tensor_maxwell",
    "monopole_flux", "SphericalResiduals", "spherical_md_residuals", "solve_k_quadratic",
    "cylindrical_k_elimination", "cylindrical_B", "cylindrical_F", "cylindrical_field_tensor",
    "CylindricalResiduals", "cylindrical_md_residuals", "TrivialSolutionReport",
    "p112_check", "p112_solve", "SolutionP1310", "P1310Result", "p1310_kd_squared",
    "p1310_f", "p1310_solve", "p1310_lift", "p1310_sample_points", "p1310_verify",
    "p1310_verify_batch",
]

T, S = sp.symbols("t s", real=True)

# ---------------------------------------------------------------------------
# term lists


@lru_cache(maxsize=None)
def term_list(name):
    """Expand a stored closed form into [(coefficient, ((factor, power), ...)), ...].

    Factor names encode derivative orders, e.g. ``kd_tr`` is d_t d_s k_d.
    """
    src = EXPRESSIONS[name]
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", src)) - {"I"}
    local = {n: sp.Symbol(n) for n in names}
    local["I"] = sp.I
    expr = sp.expand(sp.sympify(src, locals=local))
    terms = []
    for term in sp.Add.make_args(expr):
        coef, rest = term.as_coeff_mul()
        c = complex(coef)
        factors = []
        for f in rest:
            if f == sp.I:
                c *= 1j
                continue
            base, power = f.as_base_exp()
            factors.append((str(base), int(power)))
        terms.append((c, tuple(sorted(factors))))
    return terms


def evaluate_expression(name, env):
    """Sum the term list of ``name`` with factor values taken from ``env``."""
    total = 0
    for coef, factors in term_list(name):
        value = coef
        for sym, power in factors:
            value = value * env[sym] ** power
        total = total + value
    return total


def _real(z, name, tol=1e-8):
    z = np.asarray(z)
    if np.iscomplexobj(z):
        scale = 1.0 + np.abs(z.real)
        if np.any(np.abs(z.imag) > tol * scale):
            raise ValueError(f"{name}: imaginary part {np.max(np.abs(z.imag)):.3g} is not negligible")
        return z.real
    return z


# ---------------------------------------------------------------------------
# reduced profiles


def _deriv_key(name, nt, ns):
    return name if nt + ns == 0 else f"{name}_{'t' * nt}{'r' * ns}"


@lru_cache(maxsize=64)
def _compile_jet(items, order, symbols):
    """Lambdified derivative jets of ((name, expr), ...) in (T, S, *symbols).

    Cached on the symbolic structure, so profiles that differ only in the
    values of their parameter symbols share one compilation.
    """
    fns = []
    for name, e in items:
        keys, exprs = [], []
        dt = e
        for nt in range(order + 1):
            d = dt
            for ns in range(order + 1 - nt):
                keys.append(_deriv_key(name, nt, ns))
                exprs.append(d)
                d = sp.diff(d, S)
            dt = sp.diff(dt, T)
        fns.append((keys, sp.lambdify((T, S) + symbols, exprs, "numpy", cse=True)))
    return fns


class ReducedProfile:
    """Named sympy expressions in (T, S) with lambdified derivatives.

    ``jet(t, s)`` returns a dict of values keyed like ``ja``, ``ja_t``,
    ``ja_tr``, ``s_rrr`` (derivative letters: t, then r for the radial
    invariant).  ``params`` maps extra symbols in the expressions to
    numbers; they are passed at evaluation time rather than substituted.
    """

    def __init__(self, exprs, order=3, params=None):
        self.exprs = {k: sp.sympify(v) for k, v in exprs.items()}
        self.order = order
        self.params = dict(params or {})

    @cached_property
    def _functions(self):
        symbols = tuple(sorted(self.params, key=str))
        self._values = tuple(float(self.params[k]) for k in symbols)
        return _compile_jet(tuple(self.exprs.items()), self.order, symbols)

    def jet(self, t, s):
        t = np.asarray(t, dtype=float)
        s = np.asarray(s, dtype=float)
        shape = np.broadcast(t, s).shape
        out = {}
        for keys, f in self._functions:
            for k, v in zip(keys, f(t, s, *self._values)):
                out[k] = np.broadcast_to(np.asarray(v, dtype=float), shape)
        return out


def _omega_env(jet, pp):
    """Formula environment: rename w -> o (times i), add D, q, m."""
    env = {}
    for k, v in jet.items():
        if k == "w" or k.startswith("w_"):
            env["o" + k[1:]] = 1j * v
        else:
            env[k] = v
    env["D"] = env["s"] ** 2 - env["o"] ** 2
    env["q"] = pp.q
    env["m"] = pp.mass
    return env


def _check_radius(s, what="r"):
    if np.any(np.asarray(s) <= 0):
        raise DomainError(f"{what} must be positive")


def _check_D(env, tol=1e-12):
    if np.any(np.abs(env["D"]) <= tol):
        raise DegenerateDensityError("sigma^2 - omega^2 vanishes")


class _LiftedField(BilinearField):
    """4D BilinearField built from reduced profiles.

    ``components`` lists, for each of the 10 packed slots, terms
    (coordinate index or None, coefficient, expression in (T, S)); the slot
    value is sum coef * x[idx] * g(t, s).  ``radial`` are the spatial axes
    entering s.
    """

    def __init__(self, components, radial, params=None):
        exprs, slots = {}, []
        for terms in components:
            slot = []
            for idx, coef, e in terms:
                key = f"g{len(exprs)}"
                exprs[key] = e
                slot.append((idx, complex(coef), key))
            slots.append(slot)
        self._jet = ReducedProfile(exprs, order=1, params=params)
        self._slots = slots
        self._radial = list(radial)
        super().__init__(self._value, self._grad)

    def _ts(self, x):
        t = x[..., 0]
        s = np.sqrt(np.sum(x[..., self._radial] ** 2, axis=-1))
        return t, s

    def _value(self, x):
        t, s = self._ts(x)
        vals = self._jet.jet(t, s)
        out = np.zeros(x.shape[:-1] + (10,), dtype=complex)
        for c, slot in enumerate(self._slots):
            for idx, coef, key in slot:
                g = vals[key]
                out[..., c] += coef * (g if idx is None else x[..., idx] * g)
        return out

    def _grad(self, x):
        t, s = self._ts(x)
        vals = self._jet.jet(t, s)
        out = np.zeros(x.shape[:-1] + (4, 10), dtype=complex)
        for c, slot in enumerate(self._slots):
            for idx, coef, key in slot:
                g, g_t, g_s = vals[key], vals[key + "_t"], vals[key + "_r"]
                pre = 1.0 if idx is None else x[..., idx]
                out[..., 0, c] += coef * pre * g_t
                for k in self._radial:
                    out[..., k, c] += coef * pre * g_s * x[..., k] / s
                if idx is not None:
                    out[..., idx, c] += coef * g
        return out


# ---------------------------------------------------------------------------
# spherical reduction


class SphericalProfile:
    """Spherically symmetric bilinears: j = (ja, x jb, y jb, z jb), sigma, omega = i w.

    ``k`` is eliminated through k = branch * (r jb, x ja / r, y ja / r, z ja / r).
    """

    def __init__(self, ja, jb, sigma, w, branch=1, params=None):
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        self.ja, self.jb, self.sigma, self.w = (sp.sympify(v) for v in (ja, jb, sigma, w))
        self.branch = branch
        self.params = dict(params or {})

    @cached_property
    def _profile(self):
        return ReducedProfile({"ja": self.ja, "jb": self.jb, "s": self.sigma, "w": self.w},
                              params=self.params)

    def env(self, pp, t, r):
        _check_radius(r)
        env = _omega_env(self._profile.jet(t, r), pp)
        env["r"] = np.asarray(r, dtype=float)
        env["pm"] = self.branch
        return env

    def with_branch(self, branch):
        return SphericalProfile(self.ja, self.jb, self.sigma, self.w, branch, self.params)

    def fierz_residual(self, t, r):
        """ja^2 - r^2 jb^2 - (sigma^2 - omega^2)."""
        j = self._profile.jet(t, r)
        return j["ja"] ** 2 - np.asarray(r) ** 2 * j["jb"] ** 2 - (j["s"] ** 2 + j["w"] ** 2)

    def lift(self):
        pm = self.branch
        comps = [[(None, 1, self.sigma)], [(None, 1j, self.w)], [(None, 1, self.ja)]]
        comps += [[(i, 1, self.jb)] for i in (1, 2, 3)]
        comps += [[(None, pm, S * self.jb)]]
        comps += [[(i, pm, self.ja / S)] for i in (1, 2, 3)]
        return _LiftedField(comps, radial=(1, 2, 3), params=self.params)


def consistent_spherical_profile(ja, jb, theta, branch=1, params=None):
    """Fierz-consistent profile: sigma = sqrt(D) cos(theta), w = sqrt(D) sin(theta).

    D = ja^2 - r^2 jb^2 must be positive where the profile is used.
    """
    ja, jb, theta = (sp.sympify(v) for v in (ja, jb, theta))
    root = sp.sqrt(ja ** 2 - S ** 2 * jb ** 2)
    return SphericalProfile(ja, jb, root * sp.cos(theta), root * sp.sin(theta), branch, params)


def _random_poly(rng, params, scale, const=0.0, static=False, degree=2):
    """Polynomial template in (T, S) with fresh coefficient symbols.

    The random coefficients are recorded in ``params``; keeping them
    symbolic lets every random profile of one shape share a compiled jet.
    """
    if degree == 1:
        monos = [S] if static else [T, S]
    else:
        monos = [S, S ** 2] if static else [T, S, T * S, T ** 2, S ** 2]
    c = rng.uniform(-scale, scale, len(monos))
    syms = [sp.Symbol(f"c{len(params) + i}", real=True) for i in range(len(monos) + 1)]
    params.update(zip(syms, [float(const), *c]))
    return syms[0] + sum(si * mi for si, mi in zip(syms[1:], monos))


def random_spherical_profile(rng, branch=1, static=False):
    """Random smooth Fierz-consistent profile; D > 0 on t in [-1, 1], r in [0.5, 1.5]."""
    params = {}
    ja = _random_poly(rng, params, 0.2, 2.0 + rng.uniform(-0.3, 0.3), static)
    jb = _random_poly(rng, params, 0.1, rng.uniform(-0.3, 0.3), static)
    theta = _random_poly(rng, params, 0.4, rng.uniform(-0.8, 0.8), static)
    return consistent_spherical_profile(ja, jb, theta, branch, params)


def spherical_k_from_j(p, t, r):
    """(ka, kb) = branch * (r jb, ja / r)."""
    _check_radius(r)
    j = p._profile.jet(t, r)
    r = np.asarray(r, dtype=float)
    return p.branch * r * j["jb"], p.branch * j["ja"] / r


def spherical_B(p, pp, t, r, complex_path=False):
    """(B_a, B_b) with B^mu = (B_a, x B_b, y B_b, z B_b)."""
    env = p.env(pp, t, r)
    _check_D(env)
    ba, bb = evaluate_expression("sph_Ba", env), evaluate_expression("sph_Bb", env)
    if complex_path:
        return ba, bb
    return _real(ba, "B_a"), _real(bb, "B_b")


def spherical_F(p, pp, t, r, complex_path=False):
    """(F_a, F_b) with F_{0i} = x_i F_a and F_{ij} = eps_{ijk} x_k F_b.

    F_b is evaluated in its unsimplified rational form; on Fierz-consistent
    profiles it equals branch / (2 q r^3).
    """
    env = p.env(pp, t, r)
    _check_D(env)
    fa, fb = evaluate_expression("sph_Fa", env), evaluate_expression("sph_Fb", env)
    if complex_path:
        return fa, fb
    return _real(fa, "F_a"), _real(fb, "F_b")


def _central(f, t, s, axis, h):
    """Fourth-order central difference of f(t, s) in t (axis 0) or s (axis 1)."""
    offsets = (-2, -1, 1, 2)
    weights = (1 / 12, -8 / 12, 8 / 12, -1 / 12)
    total = 0
    for o, w in zip(offsets, weights):
        if axis == 0:
            total = total + w * np.asarray(f(t + o * h, s))
        else:
            total = total + w * np.asarray(f(t, s + o * h))
    return total / h


def spherical_F_from_B(p, pp, t, r, h=1e-3):
    """F_a = -d_t B_b - (1/r) d_r B_a by differencing the closed-form B."""
    t = np.asarray(t, dtype=float)
    r = np.asarray(r, dtype=float)
    bb_t = _central(lambda a, b: spherical_B(p, pp, a, b)[1], t, r, 0, h)
    ba_r = _central(lambda a, b: spherical_B(p, pp, a, b)[0], t, r, 1, h)
    return -bb_t - ba_r / r


def spherical_field_tensor(p, pp, x, include_monopole=True):
    """Assembled F_{mu nu} (lowered) at ambient points x from (F_a, F_b)."""
    x = np.asarray(x, dtype=float)
    r = np.sqrt(np.sum(x[..., 1:] ** 2, axis=-1))
    fa, fb = spherical_F(p, pp, x[..., 0], r)
    if not include_monopole:
        fb = np.zeros_like(fb)
    f = np.zeros(x.shape[:-1] + (4, 4))
    X, Y, Z = x[..., 1], x[..., 2], x[..., 3]
    for i, xi in ((1, X), (2, Y), (3, Z)):
        f[..., 0, i] = xi * fa
    f[..., 1, 2], f[..., 1, 3], f[..., 2, 3] = Z * fb, -Y * fb, X * fb
    return f - np.swapaxes(f, -1, -2)


def spherical_tensor_maxwell(p, pp, x, include_monopole=True, engine=None):
    """d_nu F^{nu mu} - q j^mu with F the assembled reduced tensor (differenced once)."""
    engine = engine or DiffEngine(mode="central")
    x = np.asarray(x, dtype=float)
    outer = np.multiply.outer(np.array([1.0, -1, -1, -1]), np.array([1.0, -1, -1, -1]))
    df = engine.grad(lambda y: spherical_field_tensor(p, pp, y, include_monopole) * outer, x)
    div = np.einsum("...nnm->...m", df)
    r = np.sqrt(np.sum(x[..., 1:] ** 2, axis=-1))
    jet = p._profile.jet(x[..., 0], r)
    j = np.concatenate([jet["ja"][..., None], x[..., 1:] * jet["jb"][..., None]], axis=-1)
    return div - pp.q * j


def monopole_flux(p, pp, t, radius, n_theta=48, n_phi=96):
    """Flux of the magnetic field M through a sphere, by Gauss-Legendre quadrature.

    M is read off the assembled tensor: M_x = -F_23, M_y = F_13, M_z = -F_12.
    """
    u, wu = np.polynomial.legendre.leggauss(n_theta)        # u = cos(theta)
    phi = 2 * np.pi * (np.arange(n_phi) + 0.5) / n_phi
    uu, pp_ = np.meshgrid(u, phi, indexing="ij")
    st = np.sqrt(1 - uu ** 2)
    normal = np.stack([st * np.cos(pp_), st * np.sin(pp_), uu], axis=-1)
    x = np.concatenate([np.full(uu.shape + (1,), float(t)), radius * normal], axis=-1)
    f = spherical_field_tensor(p, pp, x)
    m = np.stack([-f[..., 2, 3], f[..., 1, 3], -f[..., 1, 2]], axis=-1)
    flux_density = np.einsum("...i,...i->...", m, normal) * radius ** 2
    return float(np.einsum("i,ij->", wu, flux_density) * (2 * np.pi / n_phi))


class SphericalResiduals(NamedTuple):
    maxwell_0: np.ndarray      # q^2 ja - RHS of the mu = 0 equation
    maxwell_i: np.ndarray      # q^2 r jb - RHS of the mu = i equation
    fierz: np.ndarray
    continuity: np.ndarray
    axial_continuity: np.ndarray


def _unit(direction):
    d = np.asarray(direction, dtype=float)
    return d / np.linalg.norm(d)


def spherical_md_residuals(p, pp, t, r, path="verbatim", h=1e-3, direction=(1.0, 0.6, -0.3)):
    """Residuals of the two reduced Maxwell-Dirac equations plus constraints.

    ``path`` selects how the Maxwell residuals are computed:

    * ``"verbatim"``: the closed-form third-order equations;
    * ``"reduced"``: 3F_a + r d_r F_a - q ja and d_t F_a + q jb with the
      closed-form F_a differenced in (t, r);
    * ``"ambient"``: the 4D Maxwell residual of the lifted field along
      ``direction``.

    All three return q^2 ja - RHS_0 and q^2 r jb - RHS_i.
    """
    env = p.env(pp, t, r)
    _check_D(env)
    q = pp.q
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    if path == "verbatim":
        m0 = q ** 2 * env["ja"] - evaluate_expression("sph_md1", env)
        mi = q ** 2 * r * env["jb"] - evaluate_expression("sph_md2", env)
        m0, mi = _real(m0, "maxwell_0"), _real(mi, "maxwell_i")
    elif path == "reduced":
        def fa(a, b):
            return spherical_F(p, pp, a, b)[0]
        fa0 = fa(t, r)
        fa_r = _central(fa, t, r, 1, h)
        fa_t = _central(fa, t, r, 0, h)
        m0 = q * (q * env["ja"] - (3 * fa0 + r * fa_r))
        mi = q * r * (q * env["jb"] + fa_t)
    elif path == "ambient":
        n = _unit(direction)
        x = np.concatenate([t[..., None], r[..., None] * n], axis=-1)
        res = maxwell_residual(p.lift(), pp, x, DiffEngine(h=h))
        m0 = -q * res[..., 0]
        mi = -q * r * np.einsum("...i,i->...", res[..., 1:], n) / r
    else:
        raise ValueError(f"unknown path {path!r}")
    fierz = env["ja"] ** 2 - r ** 2 * env["jb"] ** 2 - env["D"]
    cont = env["ja_t"] + 3 * env["jb"] + r * env["jb_r"]
    axial = (p.branch * (r * env["jb_t"] + 2 * env["ja"] / r + env["ja_r"])
             + 2j * pp.mass * env["o"])
    return SphericalResiduals(m0, mi, _real(fierz, "fierz"), np.asarray(cont),
                              _real(axial, "axial continuity"))


# ---------------------------------------------------------------------------
# cylindrical reduction

_CYL_NAMES = ("ja", "jb", "jc", "jd", "ka", "kb", "kc", "kd")


class CylindricalProfile:
    """Cylindrically symmetric bilinears.

    j = (ja, x jb - y jc, y jb + x jc, jd), k likewise with ka..kd; sigma and
    omega = i w; all functions of (t, rho).
    """

    def __init__(self, ja, jb, jc, jd, ka, kb, kc, kd, sigma, w, params=None):
        vals = (ja, jb, jc, jd, ka, kb, kc, kd)
        self.funcs = {n: sp.sympify(v) for n, v in zip(_CYL_NAMES, vals)}
        self.sigma, self.w = sp.sympify(sigma), sp.sympify(w)
        self.params = dict(params or {})

    @cached_property
    def _profile(self):
        # the cylindrical closed forms need derivatives up to second order only
        return ReducedProfile({**self.funcs, "s": self.sigma, "w": self.w}, order=2,
                              params=self.params)

    def env(self, pp, t, rho):
        _check_radius(rho, "rho")
        env = _omega_env(self._profile.jet(t, rho), pp)
        env["r"] = np.asarray(rho, dtype=float)
        return env

    def fierz_residuals(self, t, rho):
        """(j.j - D, k.k + D, j.k) in reduced form."""
        j = self._profile.jet(t, rho)
        r2 = np.asarray(rho, dtype=float) ** 2
        d = j["s"] ** 2 + j["w"] ** 2
        jj = j["ja"] ** 2 - r2 * (j["jb"] ** 2 + j["jc"] ** 2) - j["jd"] ** 2
        kk = j["ka"] ** 2 - r2 * (j["kb"] ** 2 + j["kc"] ** 2) - j["kd"] ** 2
        jk = j["ja"] * j["ka"] - r2 * (j["jb"] * j["kb"] + j["jc"] * j["kc"]) - j["jd"] * j["kd"]
        return jj - d, kk + d, jk

    def lift(self):
        f = self.funcs
        comps = [[(None, 1, self.sigma)], [(None, 1j, self.w)]]
        for v in "jk":
            a, b, c, d = (f[v + s] for s in "abcd")
            comps += [[(None, 1, a)], [(1, 1, b), (2, -1, c)], [(2, 1, b), (1, 1, c)], [(None, 1, d)]]
        return _LiftedField(comps, radial=(1, 2), params=self.params)


def solve_k_quadratic(ja, jb, jc, jd, kb, kc, rho, sqrt=np.sqrt):
    """Both roots (ka, kd) of the orthogonality + inner-product elimination.

    Returns ((ka_plus, kd_plus), (ka_minus, kd_minus)) following the sign
    of the square root.  ``sqrt`` may be sympy.sqrt for symbolic use.
    """
    u = jb * kb + jc * kc
    a2d2 = ja ** 2 - jd ** 2
    disc = a2d2 ** 2 - rho ** 2 * a2d2 * (jb ** 2 + jc ** 2 + kb ** 2 + kc ** 2) + rho ** 4 * u ** 2
    root = sqrt(disc)
    den = jd ** 2 - ja ** 2
    kd_p = (-rho ** 2 * jd * u + ja * root) / den
    kd_m = (-rho ** 2 * jd * u - ja * root) / den
    ka_p = (-rho ** 2 * ja * u + jd * root) / den
    ka_m = (-rho ** 2 * ja * u - jd * root) / den
    return (ka_p, kd_p), (ka_m, kd_m)


def _quadratic_checks(ja, jb, jc, jd, kb, kc, rho):
    ja, jb, jc, jd, kb, kc, rho = (np.asarray(v, dtype=float) for v in (ja, jb, jc, jd, kb, kc, rho))
    if np.any(np.isclose(jd ** 2, ja ** 2, rtol=0, atol=1e-14)):
        raise DomainError("jd^2 = ja^2: the kd equation is not quadratic")
    u = jb * kb + jc * kc
    a2d2 = ja ** 2 - jd ** 2
    disc = a2d2 ** 2 - rho ** 2 * a2d2 * (jb ** 2 + jc ** 2 + kb ** 2 + kc ** 2) + rho ** 4 * u ** 2
    if np.any(disc < 0):
        raise InfeasibleError("negative discriminant: no real (ka, kd)")
    return ja, jb, jc, jd, kb, kc, rho


def cylindrical_k_elimination(p, t, rho):
    """Both candidate (ka, kd) pairs from the profile's ja..jd, kb, kc."""
    _check_radius(rho, "rho")
    j = p._profile.jet(t, rho)
    args = _quadratic_checks(j["ja"], j["jb"], j["jc"], j["jd"], j["kb"], j["kc"], rho)
    return solve_k_quadratic(*args)


def consistent_cylindrical_profile(amp, eta, alpha, beta, psi, theta, params=None):
    """Fierz-consistent cylindrical profile built from an orthonormal frame.

    In the rescaled components (a, rho b, rho c, d) the reduced inner
    product is Minkowskian.  With e = (sin b cos a, sin b sin a, cos b) and
    f = (cos b cos a, cos b sin a, -sin b) (a = alpha, b = beta),

        u = (cosh eta, sinh eta e),
        n = cos psi (sinh eta, cosh eta e) + sin psi (0, f),

    are unit timelike and unit spacelike and orthogonal, so j = amp u,
    k = amp n and sigma + omega = amp e^{i theta} satisfy every Fierz
    identity.  All arguments are expressions in (T, S), optionally with
    parameter symbols valued by ``params``; ``amp`` must stay positive.
    """
    amp, eta, alpha, beta, psi, theta = (sp.sympify(v) for v in (amp, eta, alpha, beta, psi, theta))
    e = (sp.sin(beta) * sp.cos(alpha), sp.sin(beta) * sp.sin(alpha), sp.cos(beta))
    f = (sp.cos(beta) * sp.cos(alpha), sp.cos(beta) * sp.sin(alpha), -sp.sin(beta))
    ch, sh, cp, sn = sp.cosh(eta), sp.sinh(eta), sp.cos(psi), sp.sin(psi)
    u = (ch,) + tuple(sh * c for c in e)
    n = (cp * sh,) + tuple(cp * ch * a + sn * b for a, b in zip(e, f))

    def unscale(v):
        return (amp * v[0], amp * v[1] / S, amp * v[2] / S, amp * v[3])

    return CylindricalProfile(*unscale(u), *unscale(n), amp * sp.cos(theta), amp * sp.sin(theta),
                              params)


def random_cylindrical_profile(rng, static=False):
    """Random smooth Fierz-consistent cylindrical profile (see consistent_cylindrical_profile).

    The frame parameters are linear in (t, rho), which keeps the exact
    third-order jets cheap to build.
    """
    params = {}
    amp = _random_poly(rng, params, 0.2, 1.5 + rng.uniform(-0.3, 0.3), static, degree=1)
    eta = _random_poly(rng, params, 0.2, rng.uniform(-0.6, 0.6), static, degree=1)
    alpha, beta, psi, theta = (
        _random_poly(rng, params, 0.4, rng.uniform(-1.5, 1.5), static, degree=1) for _ in range(4))
    return consistent_cylindrical_profile(amp, eta, alpha, beta, psi, theta, params)


def cylindrical_B(p, pp, t, rho, complex_path=False):
    """(B_a, B_b, B_c, B_d) with B^mu = (B_a, x B_b - y B_c, y B_b + x B_c, B_d)."""
    env = p.env(pp, t, rho)
    _check_D(env)
    out = tuple(evaluate_expression(f"cyl_B{c}", env) for c in "abcd")
    if complex_path:
        return out
    return tuple(_real(v, f"B_{c}") for v, c in zip(out, "abcd"))


def cylindrical_F(p, pp, t, rho, complex_path=False):
    """(F_a .. F_e) of the cylindrical field strength, from the expanded term lists."""
    env = p.env(pp, t, rho)
    _check_D(env)
    out = tuple(evaluate_expression(f"cyl_F{c}", env) for c in "abcde")
    if complex_path:
        return out
    return tuple(_real(v, f"F_{c}") for v, c in zip(out, "abcde"))


def cylindrical_field_tensor(p, pp, x):
    """Assembled F_{mu nu} (lowered) at ambient points x from (F_a .. F_e)."""
    x = np.asarray(x, dtype=float)
    rho = np.sqrt(x[..., 1] ** 2 + x[..., 2] ** 2)
    fa, fb, fc, fd, fe = cylindrical_F(p, pp, x[..., 0], rho)
    X, Y = x[..., 1], x[..., 2]
    f = np.zeros(x.shape[:-1] + (4, 4))
    f[..., 0, 1] = -X * fa + Y * fb
    f[..., 0, 2] = -Y * fa - X * fb
    f[..., 0, 3] = fc
    f[..., 1, 2] = fd
    f[..., 1, 3] = -X * fe
    f[..., 2, 3] = -Y * fe
    return f - np.swapaxes(f, -1, -2)


class CylindricalResiduals(NamedTuple):
    maxwell_a: np.ndarray
    maxwell_b: np.ndarray
    maxwell_c: np.ndarray
    maxwell_d: np.ndarray
    fierz_inner: np.ndarray
    fierz_orthogonality: np.ndarray
    continuity: np.ndarray
    axial_continuity: np.ndarray


def cylindrical_md_residuals(p, pp, t, rho, path="reduced", h=1e-3, phi=0.4, z=0.0):
    """Cylindrical Maxwell residuals plus Fierz and continuity residuals.

    The four Maxwell residuals are q j_X - (divergence of the assembled
    tensor), projected on the a, b, c, d slots.  With ``path="reduced"`` the
    closed-form F_a..F_e are differenced in (t, rho); with
    ``path="ambient"`` the 4D Maxwell residual of the lifted field is
    projected instead.  ``path="verbatim"`` evaluates the historically
    printed form qj_a = 2F_a + rho F_a', qj_b = -F_a,t,
    qj_c = -F_b,t + F_d'/rho, qj_d = 2F_e - F_c,t + rho F_e', which does
    not agree with the ambient divergence and is kept for comparison only.
    """
    env = p.env(pp, t, rho)
    _check_D(env)
    q = pp.q
    t = np.asarray(t, dtype=float)
    rho = np.asarray(rho, dtype=float)
    if path in ("reduced", "verbatim"):
        def comp(i):
            return lambda a, b: cylindrical_F(p, pp, a, b)[i]
        fa, fb, fc, fd, fe = cylindrical_F(p, pp, t, rho)
        fa_t, fa_r = _central(comp(0), t, rho, 0, h), _central(comp(0), t, rho, 1, h)
        fb_t = _central(comp(1), t, rho, 0, h)
        fc_t = _central(comp(2), t, rho, 0, h)
        fd_r = _central(comp(3), t, rho, 1, h)
        fe_r = _central(comp(4), t, rho, 1, h)
        # divergence d_nu F^{nu mu} of the assembled tensor, slot by slot
        div_a = -(2 * fa + rho * fa_r)
        div_b = fa_t
        div_c = fb_t + fd_r / rho
        div_d = -(fc_t + 2 * fe + rho * fe_r)
        if path == "verbatim":
            # the printed set, whose F_a, F_b and F_e terms carry the opposite sign
            div_a, div_b = 2 * fa + rho * fa_r, -fa_t
            div_c = -fb_t + fd_r / rho
            div_d = 2 * fe - fc_t + rho * fe_r
        ma = q * env["ja"] - div_a
        mb = q * env["jb"] - div_b
        mc = q * env["jc"] - div_c
        md = q * env["jd"] - div_d
    elif path == "ambient":
        x = np.stack([t, rho * np.cos(phi), rho * np.sin(phi), np.full_like(t, z)], axis=-1)
        res = maxwell_residual(p.lift(), pp, x, DiffEngine(h=h))
        X, Y = x[..., 1], x[..., 2]
        ma = -res[..., 0]
        mb = -(X * res[..., 1] + Y * res[..., 2]) / rho ** 2
        mc = -(X * res[..., 2] - Y * res[..., 1]) / rho ** 2
        md = -res[..., 3]
    else:
        raise ValueError(f"unknown path {path!r}")
    r2 = rho ** 2
    jj = env["ja"] ** 2 - r2 * (env["jb"] ** 2 + env["jc"] ** 2) - env["jd"] ** 2 - env["D"]
    kk = env["ka"] ** 2 - r2 * (env["kb"] ** 2 + env["kc"] ** 2) - env["kd"] ** 2 + env["D"]
    inner = np.maximum(np.abs(_real(jj, "fierz")), np.abs(_real(kk, "fierz")))
    ortho = (env["ja"] * env["ka"] - r2 * (env["jb"] * env["kb"] + env["jc"] * env["kc"])
             - env["jd"] * env["kd"])
    cont = 2 * env["jb"] + env["ja_t"] + rho * env["jb_r"]
    axial = 2 * env["kb"] + env["ka_t"] + rho * env["kb_r"] + 2j * pp.mass * env["o"]
    return CylindricalResiduals(np.asarray(ma), np.asarray(mb), np.asarray(mc), np.asarray(md),
                                inner, np.asarray(ortho), np.asarray(cont),
                                _real(axial, "axial continuity"))


# ---------------------------------------------------------------------------
# screw group: trivial solution


@dataclass
class TrivialSolutionReport:
    solution: dict
    steps: list                     # (name, statement, residual)
    is_trivial: bool


def p112_check(pp, sigma, omega, ja, ka, rng=None, n_points=8):
    """Evaluate each derivation step's premise on a candidate (constants).

    The candidate fields are j = (l+ ja, 0, 0, l+ ja), k likewise with ka,
    constant sigma and omega.  Continuity residuals are obtained by
    differencing the ambient invariant field, not from a reduced formula.
    """
    from .poincare import invariant_field, subgroup

    rng = rng or np.random.default_rng(0)
    sub = subgroup("P11_2", phi=0.7)
    jf, _ = invariant_field(sub, {"a": float(np.real(ja))})
    kf, _ = invariant_field(sub, {"a": float(np.real(ka))})
    x = rng.uniform(-1, 1, (n_points, 4))
    engine = DiffEngine(mode="central")
    div_j = np.einsum("...mm->...", jf.derivative(x, engine))
    div_k = np.einsum("...mm->...", kf.derivative(x, engine))
    # the ansatz vectors are null, so the Fierz inner product forces D = 0
    jv = jf(x)
    null_norm = np.abs(jv[..., 0] ** 2 - np.sum(jv[..., 1:] ** 2, axis=-1)).max()
    steps = [
        ("null_invariant_vectors", "j.j = 0 for the invariant form", float(null_norm)),
        ("fierz_null_density", "sigma^2 - omega^2 = 0", float(abs(sigma ** 2 - omega ** 2))),
        ("maxwell_constant_field", "q ja = 0 (F is constant)", float(abs(pp.q * ja))),
        ("vector_continuity", "d_mu j^mu = 2 ja = 0",
         float(np.max(np.abs(div_j)))),
        ("axial_continuity", "d_mu k^mu + 2 i m omega = 2 (ka + i m omega) = 0",
         float(np.max(np.abs(div_k + 2j * pp.mass * omega)))),
        ("reality", "sigma real, omega imaginary and sigma^2 = omega^2 force sigma = omega = 0",
         float(max(abs(sigma), abs(omega)))),
        ("axial_vanishes", "ka = -i m omega = 0", float(abs(ka))),
    ]
    return steps


def p112_solve(pp):
    """The screw-group reduction admits only sigma = omega = 0, j = k = 0."""
    solution = {"sigma": 0.0, "omega": 0.0, "ja": 0.0, "ka": 0.0,
                "j": [0.0, 0.0, 0.0, 0.0], "k": [0.0, 0.0, 0.0, 0.0]}
    steps = p112_check(pp, 0.0, 0.0, 0.0, 0.0)
    return TrivialSolutionReport(solution, steps, all(r == 0.0 for _, _, r in steps))


# ---------------------------------------------------------------------------
# non-splitting group: algebraic solution family


@dataclass(frozen=True)
class SolutionP1310:
    lam: float
    q: float
    mass: float
    ja: float
    jb: float
    ka: float
    kb: float
    kc: float
    kd: float
    branch: int = 1
    jc: float = 0.0
    jd: float = 0.0
    omega: float = 0.0

    @property
    def sigma(self):
        return self.branch * 2.0 * np.sqrt(self.ja * self.jb)

    def as_dict(self):
        d = {k: getattr(self, k) for k in ("lam", "q", "mass", "ja", "jb", "jc", "jd",
                                           "ka", "kb", "kc", "kd", "branch", "omega")}
        d["sigma"] = float(self.sigma)
        return d


@dataclass
class P1310Result:
    feasible: bool
    kd_squared: float
    solutions: tuple = ()
    warnings: list = field(default_factory=list)


def p1310_kd_squared(lam, q, mass, ja, jb, ka, branch=1):
    """kd^2 implied by f = 0 after eliminating kb = -jb ka / ja."""
    x = ja * jb
    return -(lam ** 6 * q ** 4 * x ** 2 - branch * 4 * lam ** 4 * q ** 2 * mass * x ** 1.5
             + 4 * (lam ** 2 * mass ** 2 - 1) * x + 4 * jb * ka ** 2 / ja)


def p1310_f(sol):
    """The reduced Fierz-Maxwell-Dirac function f(ja, jb, ka, kb, kd; lambda)."""
    x = sol.ja * sol.jb
    lam, q, m = sol.lam, sol.q, sol.mass
    return (lam ** 6 * q ** 4 * x ** 2 - sol.branch * 4 * lam ** 4 * q ** 2 * m * x ** 1.5
            + 4 * (lam ** 2 * m ** 2 - 1) * x - 4 * sol.ka * sol.kb + sol.kd ** 2)


def p1310_solve(lam, pp, ja, jb, ka, branch=1):
    """Solve for (kb, kc, kd) given (lambda, q, m, ja, jb, ka) and the sigma branch."""
    if not lam > 0:
        raise DomainError("lambda must be positive")
    if ja == 0:
        raise DomainError("ja = 0: kb cannot be eliminated")
    if ja * jb < 0:
        raise DomainError("ja jb < 0: sigma would be imaginary")
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    q, m = pp.q, pp.mass
    x = ja * jb
    kb = -jb * ka / ja
    kc = lam ** 3 * q ** 2 * x - branch * 2 * lam * m * np.sqrt(x)
    kd2 = float(p1310_kd_squared(lam, q, m, ja, jb, ka, branch))
    warnings = []
    if x == 0:
        warnings.append("sigma^2 - omega^2 = 0: degenerate member, B and F are undefined")
    if kd2 < 0:
        return P1310Result(False, kd2, (), warnings)
    roots = (np.sqrt(kd2), -np.sqrt(kd2)) if kd2 > 0 else (0.0,)
    sols = tuple(SolutionP1310(float(lam), float(q), float(m), float(ja), float(jb), float(ka),
                               float(kb), float(kc), float(kd), branch) for kd in roots)
    return P1310Result(True, kd2, sols, warnings)


def _bc(c, x):
    c = np.asarray(c)
    return c.reshape(c.shape + (1,) * (x.ndim - 1 - c.ndim))


def p1310_lift(lam, ja, jb, jc, jd, ka, kb, kc, kd, sigma, omega=0.0):
    """4D BilinearField of the invariant ansatz with constant coefficients.

    Parameters may be arrays of shape (M,), in which case x must have a
    leading axis of length M (one member per row); L/|L| = 1 is assumed.
    """
    def parts(x):
        lp, lm = x[..., 0] + x[..., 3], x[..., 0] - x[..., 3]
        y = x[..., 2]
        lam_ = _bc(lam, x)
        ep = np.sign(lp) * np.exp(-2 * y / lam_)
        em = np.sign(lm) * np.exp(2 * y / lam_)
        return lam_, ep, em

    def vec(x, a, b, c, d, ep, em):
        a, b, c, d = (_bc(v, x) for v in (a, b, c, d))
        return np.stack([ep * a + em * b, np.broadcast_to(c, ep.shape),
                         np.broadcast_to(d, ep.shape), ep * a - em * b], axis=-1)

    def value(x):
        _, ep, em = parts(x)
        sig = np.broadcast_to(_bc(sigma, x), ep.shape)
        om = np.broadcast_to(_bc(omega, x), ep.shape)
        return pack(sig, om, vec(x, ja, jb, jc, jd, ep, em), vec(x, ka, kb, kc, kd, ep, em))

    def grad(x):
        lam_, ep, em = parts(x)
        out = np.zeros(x.shape[:-1] + (4, 10), dtype=complex)
        dep, dem = -2 / lam_ * ep, 2 / lam_ * em         # only y-derivatives survive
        z = np.zeros_like(ep)
        for off, (a, b) in ((2, (ja, jb)), (6, (ka, kb))):
            a, b = _bc(a, x), _bc(b, x)
            out[..., 2, off:off + 4] = np.stack([dep * a + dem * b, z, z, dep * a - dem * b], -1)
        return out

    return BilinearField(value, grad)


def p1310_sample_points(lam, n, rng, margin=0.3):
    """Points with y in [-lambda, lambda], x in [-1, 1], and l+, l- of equal sign."""
    lam = np.asarray(lam, dtype=float)
    shape = lam.shape + (n,)
    lp = rng.uniform(margin, 2.0, shape)
    lm = rng.uniform(margin, 2.0, shape)
    sgn = rng.choice([-1.0, 1.0], shape)
    lp, lm = sgn * lp, sgn * lm
    y = rng.uniform(-1, 1, shape) * lam[..., None]
    xx = rng.uniform(-1, 1, shape)
    return np.stack([(lp + lm) / 2, xx, y, (lp - lm) / 2], axis=-1)


def _reduced_p1310(sols):
    """Algebraic residuals: f, orthogonality, kc equation and Fierz inner product."""
    out = []
    for s in sols:
        x = s.ja * s.jb
        sig = s.sigma
        d = sig ** 2 - s.omega ** 2
        kc_eq = s.kc - (s.lam ** 3 * s.q ** 2 * d / 4 - s.lam * s.mass * sig)
        fierz = -4 * s.ka * s.kb + s.kc ** 2 + s.kd ** 2 - d
        out.append({"f": abs(p1310_f(s)), "orthogonality": abs(s.ja * s.kb + s.jb * s.ka),
                    "kc_equation": abs(kc_eq), "fierz_inner": abs(fierz),
                    "fierz_sigma": abs(4 * x - d)})
    return out


def p1310_verify_batch(sols, n_points=50, rng=None, h=1e-3, chunk=8):
    """End-to-end ambient verification of many members sharing q and m.

    Returns one report dict per member with the max |Maxwell residual|,
    max |continuity| and |axial continuity| over ``n_points`` random points
    and the reduced algebraic residuals.
    """
    sols = list(sols)
    if not sols:
        return []
    q, m = sols[0].q, sols[0].mass
    if any(s.q != q or s.mass != m for s in sols):
        raise ValueError("batched members must share q and mass")
    rng = rng or np.random.default_rng(0)
    pp = PhysicalParams(q=q, mass=m)
    engine = DiffEngine(h=h)
    mx, vec, ax = [], [], []
    for start in range(0, len(sols), chunk):
        part = sols[start:start + chunk]
        cols = {k: np.array([getattr(s, k) for s in part], dtype=float)
                for k in ("lam", "ja", "jb", "jc", "jd", "ka", "kb", "kc", "kd", "omega")}
        cols["sigma"] = np.array([s.sigma for s in part], dtype=float)
        om = cols.pop("omega")
        field_ = p1310_lift(omega=om * 1j, **cols)
        x = p1310_sample_points(cols["lam"], n_points, rng)
        mx.append(np.abs(maxwell_residual(field_, pp, x, engine)).max(axis=(-1, -2)))
        v, a = continuity_residuals(field_, pp, x, engine)
        vec.append(np.abs(v).max(axis=-1))
        ax.append(np.abs(a).max(axis=-1))
    mx, vec, ax = (np.concatenate(v) for v in (mx, vec, ax))
    reports = []
    for i, red in enumerate(_reduced_p1310(sols)):
        reports.append({"maxwell": float(mx[i]), "continuity": float(vec[i]),
                        "axial_continuity": float(ax[i]), **{k: float(v) for k, v in red.items()}})
    return reports


def p1310_verify(sol, n_points=50, rng=None, h=1e-3):
    """Verify a single member (see ``p1310_verify_batch``)."""
    return p1310_verify_batch([sol], n_points, rng, h)[0]
