"""Dirac matrices, metric, antisymmetric symbols and charge conjugation.

The default representation is the standard Dirac one: gamma^0 is
diag(I, -I) and gamma^i carries the Pauli blocks off the diagonal.  Every
function that depends on the representation accepts an optional
``Representation`` so identities can be re-checked in a unitarily rotated
basis.
"""
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

import numpy as np

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
ETA_DIAG = np.array([1.0, -1.0, -1.0, -1.0])
I4 = np.eye(4, dtype=complex)

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)
PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)


class Representation(NamedTuple):
    """A concrete set of Dirac matrices together with gamma5 and C."""
    name: str
    gammas: np.ndarray      # shape (4, 4, 4), gammas[mu] = gamma^mu
    g5: np.ndarray
    cmat: np.ndarray


def _build(name, gammas):
    g5 = 1j * gammas[0] @ gammas[1] @ gammas[2] @ gammas[3]
    cmat = 1j * gammas[2] @ gammas[0]
    return Representation(name, gammas, g5, cmat)


def _dirac_gammas():
    g = np.empty((4, 4, 4), dtype=complex)
    g[0] = np.block([[_I2, _Z2], [_Z2, -_I2]])
    for i in range(3):
        g[i + 1] = np.block([[_Z2, PAULI[i]], [-PAULI[i], _Z2]])
    return g


DIRAC = _build("dirac", _dirac_gammas())


def rotated_representation(u, name="rotated"):
    """Return the representation gamma'^mu = U gamma^mu U^dagger.

    ``U`` must be unitary.  The charge-conjugation matrix keeps the form
    i gamma'^2 gamma'^0 only when ``U`` is real, which holds for the chiral
    rotation below.
    """
    u = np.asarray(u, dtype=complex)
    gammas = np.einsum("ab,mbc,dc->mad", u, DIRAC.gammas, u.conj())
    return _build(name, gammas)


# Real orthogonal map from the Dirac basis to the chiral (Weyl) basis.
CHIRAL_ROTATION = np.block([[_I2, -_I2], [_I2, _I2]]).real / np.sqrt(2.0)
CHIRAL = rotated_representation(CHIRAL_ROTATION, "chiral")


def _rep(rep):
    return DIRAC if rep is None else rep


def _check_index(*idx):
    for i in idx:
        if i not in (0, 1, 2, 3):
            raise IndexError(f"spacetime index must be in 0..3, got {i!r}")


def gamma(mu, rep=None):
    """gamma^mu (upper index)."""
    _check_index(mu)
    return _rep(rep).gammas[mu].copy()


def gamma_lower(mu, rep=None):
    """gamma_mu = eta_{mu mu} gamma^mu."""
    return ETA_DIAG[mu] * gamma(mu, rep)


def gamma5(rep=None):
    return _rep(rep).g5.copy()


def sigma_mn(mu, nu, rep=None):
    """sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu]."""
    _check_index(mu, nu)
    g = _rep(rep).gammas
    return 0.5j * (g[mu] @ g[nu] - g[nu] @ g[mu])


def charge_conj_matrix(rep=None):
    """C = i gamma^2 gamma^0."""
    return _rep(rep).cmat.copy()


def sigma_all(rep=None):
    """Array s[mu, nu] = sigma^{mu nu}, shape (4, 4, 4, 4)."""
    g = _rep(rep).gammas
    return 0.5j * (np.einsum("mab,nbc->mnac", g, g) - np.einsum("nab,mbc->mnac", g, g))


def _parity(perm):
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def levi_civita(mu, nu, rho, sig, lower=False):
    """epsilon^{mu nu rho sig} with epsilon^{0123} = +1.

    With ``lower=True`` the fully covariant symbol is returned, which
    carries an extra factor det(eta) = -1.
    """
    _check_index(mu, nu, rho, sig)
    idx = (mu, nu, rho, sig)
    if len(set(idx)) < 4:
        return 0
    value = _parity(idx)
    return -value if lower else value


@lru_cache(maxsize=None)
def _epsilon_tensor():
    eps = np.zeros((4, 4, 4, 4))
    for perm in permutations(range(4)):
        eps[perm] = _parity(perm)
    eps.setflags(write=False)
    return eps


def epsilon_upper():
    """Full array of epsilon^{mu nu rho sig}, built from permutation parity."""
    return _epsilon_tensor()


def epsilon_lower():
    return -_epsilon_tensor()


def delta4(mu, nu, rho, sig):
    """delta^{mu nu rho sig} = i(eta^{mu rho} eta^{nu sig} - eta^{mu sig} eta^{nu rho})."""
    _check_index(mu, nu, rho, sig)
    return 1j * (ETA[mu, rho] * ETA[nu, sig] - ETA[mu, sig] * ETA[nu, rho])


@lru_cache(maxsize=None)
def _delta_tensor():
    d = 1j * (np.einsum("ac,bd->abcd", ETA, ETA) - np.einsum("ad,bc->abcd", ETA, ETA))
    d.setflags(write=False)
    return d


def delta_upper():
    """Full array of delta^{mu nu rho sig}."""
    return _delta_tensor()


def lower_index(v, axis=-1):
    """Lower one spacetime index of an array with the Minkowski metric."""
    shape = [1] * np.ndim(v)
    shape[axis] = 4
    return v * ETA_DIAG.reshape(shape)


def minkowski_dot(a, b):
    """a^mu b_mu over the last axis (no complex conjugation)."""
    return np.einsum("...m,...m->...", a, lower_index(b))


# ---------------------------------------------------------------------------
# Identity verification


class IdentityId(str, Enum):
    ANTICOMMUTATOR = "anticommutator"
    COMMUTATOR_SIGMA = "commutator_sigma"
    GAMMA5_DEFINITION = "gamma5_definition"
    GAMMA5_SQUARE = "gamma5_square"
    GAMMA5_ANTICOMMUTATOR = "gamma5_anticommutator"
    GAMMA5_SIGMA_COMMUTATOR = "gamma5_sigma_commutator"
    GAMMA_GAMMA_EXPANSION = "gamma_gamma_expansion"
    GAMMA_CONTRACTION = "gamma_contraction"
    GAMMA5_SANDWICH = "gamma5_sandwich"
    TRIPLE_GAMMA = "triple_gamma"
    GAMMA_SANDWICH = "gamma_sandwich"
    GAMMA5_GAMMA_SANDWICH = "gamma5_gamma_sandwich"
    QUADRUPLE_GAMMA = "quadruple_gamma"
    GAMMA_SIGMA = "gamma_sigma"
    SIGMA_GAMMA = "sigma_gamma"
    GAMMA_SIGMA_GAMMA = "gamma_sigma_gamma"
    SIGMA_SANDWICH = "sigma_sandwich"
    EPSILON_CONTRACTION = "epsilon_contraction"
    CC_GAMMA = "cc_gamma"
    CC_GAMMA5 = "cc_gamma5"
    CC_SIGMA = "cc_sigma"
    CC_GAMMA_PAIR = "cc_gamma_pair"
    CC_GAMMA5_GAMMA = "cc_gamma5_gamma"
    CC_BILINEAR = "cc_bilinear"
    CC_SCALAR = "cc_scalar"
    CC_VECTOR = "cc_vector"
    CC_TENSOR = "cc_tensor"
    CC_DERIVATIVE = "cc_derivative"
    CC_SELF_NEGATING = "cc_self_negating"
    COMPLEX_CONJUGATION = "complex_conjugation"


class Report(NamedTuple):
    identity: str
    max_abs_residual: float


def _max_abs(x):
    return float(np.max(np.abs(x))) if np.size(x) else 0.0


def clifford_basis(rep=None):
    """The sixteen matrices I, gamma^mu, sigma^{mu<nu}, g5 gamma^mu, g5."""
    r = _rep(rep)
    s = sigma_all(r)
    basis = [I4] + [r.gammas[m] for m in range(4)]
    basis += [s[m, n] for m in range(4) for n in range(m + 1, 4)]
    basis += [r.g5 @ r.gammas[m] for m in range(4)]
    basis.append(r.g5)
    return np.array(basis)


def _random_spinors(rng, n):
    return rng.uniform(-1, 1, (n, 4)) + 1j * rng.uniform(-1, 1, (n, 4))


def _identity_residual(ident, r, rng, n_spinors):
    g = r.gammas
    gl = np.einsum("m,mab->mab", ETA_DIAG, g)
    g5 = r.g5
    s = sigma_all(r)
    eps = epsilon_upper()
    epsl = epsilon_lower()
    c = r.cmat
    cinv = np.linalg.inv(c)
    gg = np.einsum("mab,nbc->mnac", g, g)
    eta_i = np.einsum("mn,ab->mnab", ETA, I4)

    def cc(mat):
        return cinv @ mat.swapaxes(-1, -2) @ c

    if ident is IdentityId.ANTICOMMUTATOR:
        return gg + gg.swapaxes(0, 1) - 2 * eta_i
    if ident is IdentityId.COMMUTATOR_SIGMA:
        return gg - gg.swapaxes(0, 1) + 2j * s
    if ident is IdentityId.GAMMA5_DEFINITION:
        four = np.einsum("mab,nbc,rcd,sde->mnrsae", g, g, g, g)
        from_eps = -(1j / 24) * np.einsum("mnrs,mnrsae->ae", epsl, four)
        from_lower = -1j * gl[0] @ gl[1] @ gl[2] @ gl[3]
        return np.array([from_eps - g5, from_lower - g5])
    if ident is IdentityId.GAMMA5_SQUARE:
        return g5 @ g5 - I4
    if ident is IdentityId.GAMMA5_ANTICOMMUTATOR:
        return g5 @ g + g @ g5
    if ident is IdentityId.GAMMA5_SIGMA_COMMUTATOR:
        return g5 @ s - s @ g5
    if ident is IdentityId.GAMMA_GAMMA_EXPANSION:
        return gg - (eta_i - 1j * s)
    if ident is IdentityId.GAMMA_CONTRACTION:
        return np.einsum("mab,mbc->ac", g, gl) - 4 * I4
    if ident is IdentityId.GAMMA5_SANDWICH:
        return np.einsum("mab,bc,mcd->ad", g, g5, gl) + 4 * g5
    if ident is IdentityId.TRIPLE_GAMMA:
        lhs = np.einsum("mnac,lcd->mnlad", gg, g)
        g5gl = g5 @ gl
        rhs = (np.einsum("mn,lab->mnlab", ETA, g)
               + np.einsum("nl,mab->mnlab", ETA, g)
               - np.einsum("ml,nab->mnlab", ETA, g)
               - 1j * np.einsum("mnls,sab->mnlab", eps, g5gl))
        return lhs - rhs
    if ident is IdentityId.GAMMA_SANDWICH:
        return np.einsum("nab,mbc,ncd->mad", g, g, gl) + 2 * g
    if ident is IdentityId.GAMMA5_GAMMA_SANDWICH:
        lhs = np.einsum("nab,bc,mcd,nde->mae", g, g5, g, gl)
        return lhs - 2 * g5 @ g
    if ident is IdentityId.QUADRUPLE_GAMMA:
        lhs = np.einsum("mnac,secd->mnsead", gg, gg)
        E = ETA
        rhs = (np.einsum("mn,se,ab->mnseab", E, E, I4)
               + np.einsum("ns,me,ab->mnseab", E, E, I4)
               - np.einsum("ms,ne,ab->mnseab", E, E, I4)
               - 1j * np.einsum("mn,seab->mnseab", E, s)
               - 1j * np.einsum("ns,meab->mnseab", E, s)
               + 1j * np.einsum("ms,neab->mnseab", E, s)
               + 1j * np.einsum("me,snab->mnseab", E, s)
               + 1j * np.einsum("ne,msab->mnseab", E, s)
               + 1j * np.einsum("se,nmab->mnseab", E, s)
               - 1j * np.einsum("mnse,ab->mnseab", eps, g5))
        return lhs - rhs
    if ident is IdentityId.GAMMA_SIGMA:
        lhs = np.einsum("eab,mnbc->emnac", g, s)
        rhs = (1j * np.einsum("em,nab->emnab", ETA, g)
               - 1j * np.einsum("en,mab->emnab", ETA, g)
               + np.einsum("mnes,sab->emnab", eps, g5 @ gl))
        return lhs - rhs
    if ident is IdentityId.SIGMA_GAMMA:
        lhs = np.einsum("mnab,ebc->mneac", s, g)
        rhs = (1j * np.einsum("ne,mab->mneab", ETA, g)
               - 1j * np.einsum("me,nab->mneab", ETA, g)
               + np.einsum("mnes,sab->mneab", eps, g5 @ gl))
        return lhs - rhs
    if ident is IdentityId.GAMMA_SIGMA_GAMMA:
        lhs = np.einsum("mab,sebc,ncd->msenad", g, s, g)
        # sigma^mu_lambda: lower the second index
        s_mixed = np.einsum("mlab,l->mlab", s, ETA_DIAG)
        rhs = (1j * np.einsum("en,ms,ab->msenab", ETA, ETA, I4)
               - 1j * np.einsum("sn,me,ab->msenab", ETA, ETA, I4)
               + np.einsum("en,msab->msenab", ETA, s)
               - np.einsum("sn,meab->msenab", ETA, s)
               - np.einsum("senm,ab->msenab", eps, g5)
               + 1j * np.einsum("senl,bc,mlca->msenba", eps, g5, s_mixed))
        return lhs - rhs
    if ident is IdentityId.SIGMA_SANDWICH:
        return np.einsum("sab,mnbc,scd->mnad", g, s, gl)
    if ident is IdentityId.EPSILON_CONTRACTION:
        # epsilon_lambda^{mu nu tau}: lower the first index of epsilon
        eps_l1 = np.einsum("l,lmnt->lmnt", ETA_DIAG, eps)
        lhs = -np.einsum("lrse,lmnt->rsemnt", eps, eps_l1)
        E = ETA
        rhs = (np.einsum("rm,sn,et->rsemnt", E, E, E)
               - np.einsum("rm,en,st->rsemnt", E, E, E)
               + np.einsum("rn,st,em->rsemnt", E, E, E)
               - np.einsum("rn,et,sm->rsemnt", E, E, E)
               + np.einsum("rt,sm,en->rsemnt", E, E, E)
               - np.einsum("rt,em,sn->rsemnt", E, E, E))
        return lhs - rhs
    if ident is IdentityId.CC_GAMMA:
        return cc(gl) + gl
    if ident is IdentityId.CC_GAMMA5:
        return cc(g5) - g5
    if ident is IdentityId.CC_SIGMA:
        # transposition reverses the gamma order inside sigma, so the
        # transported matrix picks up a minus sign
        sl = np.einsum("m,n,mnab->mnab", ETA_DIAG, ETA_DIAG, s)
        return cc(sl) + sl
    if ident is IdentityId.CC_GAMMA_PAIR:
        pair = np.einsum("mab,nbc->mnac", gl, gl)
        return cc(pair) - pair.swapaxes(0, 1)
    if ident is IdentityId.CC_GAMMA5_GAMMA:
        m = g5 @ gl
        return cc(m) - m

    # spinor identities
    psi = _random_spinors(rng, n_spinors)
    chi = _random_spinors(rng, n_spinors)
    g0 = g[0]

    def bar(x):
        return x.conj() @ g0

    def conj(x):
        return np.einsum("ab,nb->na", c, bar(x))

    def sandwich(left, mat, right):
        return np.einsum("na,...ab,nb->n...", left, mat, right)

    if ident is IdentityId.CC_BILINEAR:
        basis = clifford_basis(r)
        lhs = sandwich(bar(conj(psi)), basis, conj(chi))
        rhs = -sandwich(bar(chi), cc(basis), psi)
        return lhs - rhs
    if ident is IdentityId.CC_SCALAR:
        return sandwich(bar(conj(psi)), I4, conj(psi)) + sandwich(bar(psi), I4, psi)
    if ident is IdentityId.CC_VECTOR:
        return sandwich(bar(conj(psi)), gl, conj(psi)) - sandwich(bar(psi), gl, psi)
    if ident is IdentityId.CC_TENSOR:
        return sandwich(bar(conj(psi)), s, conj(psi)) - sandwich(bar(psi), s, psi)
    if ident is IdentityId.CC_DERIVATIVE:
        dpsi = rng.uniform(-1, 1, (n_spinors, 4, 4)) + 1j * rng.uniform(-1, 1, (n_spinors, 4, 4))
        dpsi_bar = np.einsum("nva,ab->nvb", dpsi.conj(), g0)
        dpsi_c = np.einsum("ab,nvb->nva", c, dpsi_bar)
        psic_bar = bar(conj(psi))
        # gamma_mu gamma^nu, indexed [mu, nu]
        prod_mn = np.einsum("mab,nbc->mnac", gl, g)
        lhs = np.einsum("pa,mvab,pvb->pm", psic_bar, prod_mn, dpsi_c)
        prod_nm = np.einsum("vab,mbc->mvac", g, gl)
        rhs = -np.einsum("pva,mvab,pb->pm", dpsi_bar, prod_nm, psi)
        return lhs - rhs
    if ident is IdentityId.CC_SELF_NEGATING:
        left = bar(conj(psi))
        return np.concatenate([
            sandwich(left, I4, psi)[:, None],
            sandwich(left, g5 @ gl, psi),
            sandwich(left, g5, psi)[:, None],
        ], axis=1)
    if ident is IdentityId.COMPLEX_CONJUGATION:
        basis = clifford_basis(r)
        dagger = np.einsum("ab,kcb,cd->kad", g0, basis.conj(), g0)
        lhs = sandwich(bar(chi), basis, psi).conj()
        rhs = sandwich(bar(psi), dagger, chi)
        return lhs - rhs
    raise ValueError(f"unknown identity {ident!r}")


def verify_identity(ident, rep=None, rng=None, n_spinors=100):
    """Evaluate both sides of an identity over all free indices.

    Identities involving spinors are evaluated over ``n_spinors`` random
    complex spinors.  Returns the maximum absolute residual.
    """
    try:
        ident = IdentityId(ident)
    except ValueError:
        raise ValueError(f"unknown identity {ident!r}") from None
    rng = np.random.default_rng(rng)
    resid = _identity_residual(ident, _rep(rep), rng, n_spinors)
    return Report(ident.value, _max_abs(resid))


def verify_all(rep=None, rng=None, n_spinors=100):
    rng = np.random.default_rng(rng)
    return [verify_identity(i, rep, rng, n_spinors) for i in IdentityId]
