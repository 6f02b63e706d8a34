"""Poincare algebra elements, their vector fields and Lie-derivative residuals.

A generator is stored as an affine vector field xi^mu(x) = X^mu_nu x^nu + a^mu,
with X in the Lorentz algebra and a a constant translation.  Invariance of
a scalar phi or a vector Phi along xi is measured by

    L_xi phi   = xi^s d_s phi,
    L_xi Phi^m = xi^s d_s Phi^m - (d_s xi^m) Phi^s = xi^s d_s Phi^m - X^m_s Phi^s.

Four subgroups are provided: spherical rotations, rotations about and
translations along z, the screw group with three null/transverse
translations, and the non-splitting group generated by B_2 + lambda X_2
together with X_1, X_3, X_4.  All fields are evaluated in Cartesian
coordinates (t, x, y, z); light-cone coordinates l+- = t +- z are only used
inside formulas.
"""
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .differentiation import DiffEngine
from .dirac_algebra import ETA

__all__ = [
    "GeneratorSpec", "SubgroupSpec", "AmbientField", "lorentz_basis", "bracket_formula",
    "boost", "rotation", "pwz_lorentz", "translation", "pwz_translation", "screw", "b_tilde",
    "bracket", "span_residual", "closure_residual", "subgroup", "SUBGROUPS",
    "generator_vector_field", "lie_derivative_scalar", "lie_derivative_vector",
    "light_cone", "spherical_radius", "cylindrical_radius", "abs_L", "zeta_phi",
    "zeta_tilde", "alpha_invariant", "beta_invariant", "invariant_field", "sample_points",
    "ansatz_residual", "random_profile",
]

_FD = DiffEngine(mode="central", h=1e-3, order=4)


@dataclass(frozen=True)
class GeneratorSpec:
    """Affine generator xi = lorentz @ x + translation."""
    lorentz: np.ndarray = field(default_factory=lambda: np.zeros((4, 4)))
    translation: np.ndarray = field(default_factory=lambda: np.zeros(4))
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lorentz", np.asarray(self.lorentz, dtype=float).reshape(4, 4))
        object.__setattr__(self, "translation", np.asarray(self.translation, dtype=float).reshape(4))

    def __add__(self, other):
        return GeneratorSpec(self.lorentz + other.lorentz, self.translation + other.translation,
                             f"{self.label}+{other.label}")

    def scaled(self, c, label=None):
        return GeneratorSpec(c * self.lorentz, c * self.translation, label or f"{c}*{self.label}")

    def vector(self):
        """Flattened 20-component coordinates used for span computations."""
        return np.concatenate([self.lorentz.ravel(), self.translation])

    def lorentz_defect(self):
        """max |(eta X)^T + eta X|; zero for members of the Lorentz algebra."""
        m = ETA @ self.lorentz
        return float(np.max(np.abs(m + m.T)))


# ---------------------------------------------------------------------------
# basis elements

def lorentz_basis(alpha, beta):
    """(l_{alpha beta})^mu_nu = delta^mu_alpha eta_{beta nu} - delta^mu_beta eta_{alpha nu}."""
    m = np.zeros((4, 4))
    m[alpha, :] += ETA[beta, :]
    m[beta, :] -= ETA[alpha, :]
    return m


def bracket_formula(a, b, c, d):
    """Structure-constant prediction for the matrix commutator [l_ab, l_cd]."""
    return (ETA[a, d] * lorentz_basis(b, c) + ETA[b, c] * lorentz_basis(a, d)
            - ETA[a, c] * lorentz_basis(b, d) - ETA[b, d] * lorentz_basis(a, c))


def _gen(matrix, label):
    return GeneratorSpec(matrix, np.zeros(4), label)


def boost(i):
    """K_i = -l_{0i}."""
    return _gen(-lorentz_basis(0, i), f"K{i}")


def rotation(i):
    """L_1 = l_23, L_2 = -l_13, L_3 = l_12."""
    mats = {1: lorentz_basis(2, 3), 2: -lorentz_basis(1, 3), 3: lorentz_basis(1, 2)}
    return _gen(mats[i], f"L{i}")


def pwz_lorentz(i):
    """PWZ light-cone Lorentz basis B_1 .. B_6."""
    lb = lorentz_basis
    mats = {
        1: 2 * lb(1, 2),
        2: 2 * lb(0, 3),
        3: lb(1, 3) + lb(0, 1),
        4: lb(2, 3) + lb(0, 2),
        5: -lb(1, 3) + lb(0, 1),
        6: lb(2, 3) - lb(0, 2),
    }
    return _gen(mats[i], f"B{i}")


def translation(mu):
    """P_mu: unit translation along coordinate mu."""
    a = np.zeros(4)
    a[mu] = 1.0
    return GeneratorSpec(np.zeros((4, 4)), a, f"P{mu}")


def pwz_translation(i):
    """X_1 = (P0 - P3)/2, X_2 = P2, X_3 = -P1, X_4 = (P0 + P3)/2."""
    vecs = {1: (0.5, 0, 0, -0.5), 2: (0, 0, 1, 0), 3: (0, -1, 0, 0), 4: (0.5, 0, 0, 0.5)}
    return GeneratorSpec(np.zeros((4, 4)), np.array(vecs[i], dtype=float), f"X{i}")


def screw(phi):
    """B_phi = cos(phi) B_1 + sin(phi) B_2."""
    m = np.cos(phi) * pwz_lorentz(1).lorentz + np.sin(phi) * pwz_lorentz(2).lorentz
    return _gen(m, f"B_phi({phi:g})")


def b_tilde(lam):
    """B~_lambda = B_2 + lambda X_2 (a non-splitting element)."""
    return GeneratorSpec(pwz_lorentz(2).lorentz, lam * pwz_translation(2).translation,
                         f"B~({lam:g})")


# ---------------------------------------------------------------------------
# algebra

def bracket(g1, g2):
    """Lie bracket of the vector fields: [xi1, xi2] = xi1.d xi2 - xi2.d xi1."""
    x1, a1, x2, a2 = g1.lorentz, g1.translation, g2.lorentz, g2.translation
    return GeneratorSpec(x2 @ x1 - x1 @ x2, x2 @ a1 - x1 @ a2, f"[{g1.label},{g2.label}]")


def span_residual(gens, g):
    """Distance of g from the linear span of gens (least squares, 20-dim space)."""
    a = np.stack([h.vector() for h in gens], axis=1)
    v = g.vector()
    coef, *_ = np.linalg.lstsq(a, v, rcond=None)
    return float(np.max(np.abs(a @ coef - v)))


def closure_residual(gens):
    """Largest span residual over all pairwise brackets (0 for a subalgebra)."""
    worst = 0.0
    for g1, g2 in combinations(gens, 2):
        worst = max(worst, span_residual(gens, bracket(g1, g2)))
    return worst


@dataclass(frozen=True)
class SubgroupSpec:
    generators: tuple
    name: str
    params: dict = field(default_factory=dict)


SUBGROUPS = ("P3_4", "P12_8", "P11_2", "P13_10tilde")


def subgroup(name, phi=None, lam=None):
    """Build one of the four supported subgroups.

    ``phi`` (screw group) must lie in (0, pi) without pi/2; ``lam``
    (non-splitting group) must be positive.
    """
    if name == "P3_4":
        gens = (rotation(1), rotation(2), rotation(3))
        params = {}
    elif name == "P12_8":
        gens = (rotation(3), translation(3))
        params = {}
    elif name == "P11_2":
        if phi is None or not 0 < phi < np.pi or np.isclose(phi, np.pi / 2):
            raise ValueError("P11_2 needs phi in (0, pi) excluding pi/2")
        gens = (screw(phi), pwz_translation(1), pwz_translation(2), pwz_translation(3))
        params = {"phi": float(phi)}
    elif name == "P13_10tilde":
        if lam is None or not lam > 0:
            raise ValueError("P13_10tilde needs lambda > 0")
        gens = (b_tilde(lam), pwz_translation(1), pwz_translation(3), pwz_translation(4))
        params = {"lambda": float(lam)}
    else:
        raise ValueError(f"unknown subgroup {name!r}; expected one of {SUBGROUPS}")
    return SubgroupSpec(gens, name, params)


# ---------------------------------------------------------------------------
# fields and Lie derivatives

class AmbientField:
    """A scalar or vector field on Minkowski space, x (..., 4) -> (..., *shape).

    ``grad``, if given, returns derivatives with shape (..., 4, *shape);
    otherwise central differences are used.
    """

    def __init__(self, value, grad=None):
        self.value = value
        self.grad = grad

    def __call__(self, x):
        return self.value(np.asarray(x, dtype=float))

    def derivative(self, x, engine=None):
        x = np.asarray(x, dtype=float)
        if self.grad is not None and (engine is None or engine.analytic):
            return self.grad(x)
        engine = engine if engine is not None and not engine.analytic else _FD
        return engine.grad(self.value, x)


def _as_field(f):
    return f if isinstance(f, AmbientField) else AmbientField(f)


def generator_vector_field(g, x):
    """xi^mu(x) = X^mu_nu x^nu + a^mu."""
    x = np.asarray(x, dtype=float)
    return np.einsum("mn,...n->...m", g.lorentz, x) + g.translation


def lie_derivative_scalar(f, g, x, engine=None):
    """xi^s d_s f at x."""
    f = _as_field(f)
    x = np.asarray(x, dtype=float)
    df = f.derivative(x, engine)
    return np.einsum("...s,...s->...", generator_vector_field(g, x), df)


def lie_derivative_vector(F, g, x, engine=None):
    """xi^s d_s Phi^m - X^m_s Phi^s at x."""
    F = _as_field(F)
    x = np.asarray(x, dtype=float)
    dphi = F.derivative(x, engine)
    transport = np.einsum("...s,...sm->...m", generator_vector_field(g, x), dphi)
    return transport - np.einsum("ms,...s->...m", g.lorentz, F(x))


# ---------------------------------------------------------------------------
# invariant coordinate functions

def light_cone(x):
    """(l+, l-) = (t + z, t - z)."""
    x = np.asarray(x, dtype=float)
    return x[..., 0] + x[..., 3], x[..., 0] - x[..., 3]


def spherical_radius(x):
    x = np.asarray(x, dtype=float)
    return np.sqrt(x[..., 1] ** 2 + x[..., 2] ** 2 + x[..., 3] ** 2)


def cylindrical_radius(x):
    x = np.asarray(x, dtype=float)
    return np.sqrt(x[..., 1] ** 2 + x[..., 2] ** 2)


def abs_L(x):
    """|L| = |l+ l-| = |t^2 - z^2|."""
    lp, lm = light_cone(x)
    return np.abs(lp * lm)


def _chi(x):
    # polar angle in the (y, x) plane: y + i x = rho exp(i chi)
    return np.arctan2(x[..., 1], x[..., 2])


def zeta_phi(x, phi):
    """zeta_phi = (l-/l+) exp(2 tan(phi) chi), annihilated by B_phi."""
    x = np.asarray(x, dtype=float)
    lp, lm = light_cone(x)
    return (lm / lp) * np.exp(2 * np.tan(phi) * _chi(x))


def zeta_tilde(x, phi):
    """zeta~_phi = l+^2 exp(-2 tan(phi) chi), annihilated by B_phi and X_1."""
    x = np.asarray(x, dtype=float)
    lp, _ = light_cone(x)
    return lp ** 2 * np.exp(-2 * np.tan(phi) * _chi(x))


def alpha_invariant(x, lam):
    """alpha = |l+| exp(2y/lambda), annihilated by B~_lambda and X_1."""
    x = np.asarray(x, dtype=float)
    lp, _ = light_cone(x)
    return np.abs(lp) * np.exp(2 * x[..., 2] / lam)


def beta_invariant(x, lam):
    """beta = |l-| exp(-2y/lambda), annihilated by B~_lambda."""
    x = np.asarray(x, dtype=float)
    _, lm = light_cone(x)
    return np.abs(lm) * np.exp(-2 * x[..., 2] / lam)


# ---------------------------------------------------------------------------
# invariant ansatz fields

_ARITY = {
    "P3_4": ("a", "b"),
    "P12_8": ("a", "b", "c", "d"),
    "P11_2": ("a",),
    "P13_10tilde": ("a", "b", "c", "d"),
}


def _const(v):
    return lambda *args: np.full(np.broadcast(*args).shape, float(v))


def _profile_fn(v):
    return v if callable(v) else _const(v)


def invariant_field(sub, profile):
    """Return (vector_field, scalar_field) of the invariant ansatz for ``sub``.

    ``profile`` maps component names to values.  Spherical and cylindrical
    components are callables of (t, r) or (t, rho) (numbers are accepted as
    constants); the screw and non-splitting groups take constants.  The
    optional entry ``"s"`` gives the scalar field profile (default 0).
    """
    names = _ARITY[sub.name]
    extra = set(profile) - set(names) - {"s"}
    missing = set(names) - set(profile)
    if extra or missing:
        raise ValueError(f"{sub.name} profile needs components {names} (+ optional 's'); "
                         f"missing {sorted(missing)}, unexpected {sorted(extra)}")
    if sub.name in ("P11_2", "P13_10tilde"):
        for key, v in profile.items():
            if callable(v):
                raise ValueError(f"{sub.name} component {key!r} must be a constant")

    if sub.name == "P3_4":
        a, b = _profile_fn(profile["a"]), _profile_fn(profile["b"])
        s = _profile_fn(profile.get("s", 0.0))

        def vec(x):
            t, r = x[..., 0], spherical_radius(x)
            bb = b(t, r)
            return np.stack([a(t, r), x[..., 1] * bb, x[..., 2] * bb, x[..., 3] * bb], axis=-1)

        def sca(x):
            return s(x[..., 0], spherical_radius(x))

    elif sub.name == "P12_8":
        a, b, c, d = (_profile_fn(profile[k]) for k in "abcd")
        s = _profile_fn(profile.get("s", 0.0))

        def vec(x):
            t, rho = x[..., 0], cylindrical_radius(x)
            bb, cc = b(t, rho), c(t, rho)
            return np.stack([a(t, rho), x[..., 1] * bb - x[..., 2] * cc,
                             x[..., 2] * bb + x[..., 1] * cc, d(t, rho)], axis=-1)

        def sca(x):
            return s(x[..., 0], cylindrical_radius(x))

    elif sub.name == "P11_2":
        a = float(profile["a"])
        s = float(profile.get("s", 0.0))

        def vec(x):
            lp, _ = light_cone(x)
            z = np.zeros_like(lp)
            return np.stack([lp * a, z, z, lp * a], axis=-1)

        def sca(x):
            return np.full(x.shape[:-1], s)

    else:
        lam = sub.params["lambda"]
        a, b, c, d = (float(profile[k]) for k in "abcd")
        s = float(profile.get("s", 0.0))

        def vec(x):
            lp, lm = light_cone(x)
            ep = np.sign(lp) * np.exp(-2 * x[..., 2] / lam) * a
            em = np.sign(lm) * np.exp(2 * x[..., 2] / lam) * b
            return np.stack([ep + em, np.full_like(lp, c), np.full_like(lp, d), ep - em], axis=-1)

        def sca(x):
            return np.full(x.shape[:-1], s)

    return AmbientField(vec), AmbientField(sca)


def sample_points(sub, n, rng, margin=0.3):
    """Random points away from the singular sets of ``sub``'s ansatz.

    Spherical and cylindrical radii stay above ``margin``; for the screw
    and non-splitting groups both light-cone coordinates keep |l+-| above
    ``margin`` with a common sign, and y stays within [-lambda, lambda].
    """
    rng = np.random.default_rng(rng)
    if sub.name in ("P3_4", "P12_8"):
        x = rng.uniform(-1.5, 1.5, (n, 4))
        axes = (1, 2, 3) if sub.name == "P3_4" else (1, 2)
        rad = np.sqrt(np.sum(x[:, axes] ** 2, axis=-1))
        target = rng.uniform(margin, 1.5, n)
        x[:, axes] *= (target / rad)[:, None]
        return x
    sgn = rng.choice([-1.0, 1.0], n)
    lp = sgn * rng.uniform(margin, 2.0, n)
    lm = sgn * rng.uniform(margin, 2.0, n)
    lam = sub.params.get("lambda", 1.0)
    y = rng.uniform(-lam, lam, n)
    return np.stack([(lp + lm) / 2, rng.uniform(-1, 1, n), y, (lp - lm) / 2], axis=-1)


def ansatz_residual(sub, profile, x, engine=None):
    """Largest Lie derivative of the invariant ansatz over all generators of ``sub``."""
    vec, sca = invariant_field(sub, profile)
    worst = 0.0
    for g in sub.generators:
        worst = max(worst, float(np.max(np.abs(lie_derivative_vector(vec, g, x, engine)))),
                    float(np.max(np.abs(lie_derivative_scalar(sca, g, x, engine)))))
    return worst


def random_profile(sub, rng):
    """A random smooth profile accepted by ``invariant_field`` for ``sub``."""
    rng = np.random.default_rng(rng)
    names = _ARITY[sub.name] + ("s",)
    if sub.name in ("P11_2", "P13_10tilde"):
        return {k: float(rng.uniform(-1, 1)) for k in names}

    def poly():
        c = rng.uniform(-1, 1, 4)
        return lambda t, s: c[0] + c[1] * t + c[2] * s + c[3] * t * s ** 2

    return {k: poly() for k in names}
