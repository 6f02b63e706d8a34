import numpy as np
import pytest

from conftest import make_gauged_plane_wave, make_polynomial_spinor_field
from fierz_md.differentiation import DiffEngine
from fierz_md.dirac_algebra import lower_index
from fierz_md.inversion import PhysicalParams, constant_bilinear_field, invert_A_tensor
from fierz_md.maxwell import continuity_residuals, field_strength, maxwell_residual
from fierz_md.reductions import random_spherical_profile, spherical_field_tensor

X = np.array([[0.1, -0.3, 0.2, 0.5], [-0.4, 0.2, 0.7, -0.1]])


def test_constant_field_has_zero_strength_and_residual_minus_qj():
    j = np.array([2.0, 0.3, -0.1, 0.2])
    field = constant_bilinear_field(1.3, 0.4j, j, [0.1, 0.2, 0.3, 1.0])
    pp = PhysicalParams(0.9, 0.6)
    assert np.max(np.abs(field_strength(field, pp, X))) <= 1e-12
    assert np.allclose(maxwell_residual(field, pp, X), -pp.q * j, atol=1e-9)


def test_field_strength_is_real_and_antisymmetric():
    f = field_strength(make_polynomial_spinor_field(1), PhysicalParams(1.0, 0.5), X)
    assert f.dtype.kind == "f"
    assert np.allclose(f, -np.swapaxes(f, -1, -2), atol=0)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_field_strength_equals_curl_of_bilinear_potential(seed):
    """Oracle: curl of the potential written purely in bilinears, valid on any spinor field."""
    field = make_polynomial_spinor_field(seed)
    pp = PhysicalParams(1.2, 0.7)
    engine = DiffEngine()

    def a_lower(y):
        return lower_index(invert_A_tensor(field, pp, y, engine)).real

    da = engine.outer().grad(a_lower, X)
    curl = da - np.swapaxes(da, -1, -2)
    assert np.max(np.abs(field_strength(field, pp, X, engine) - curl)) <= 1e-6


def test_gauged_plane_wave_has_vanishing_field_strength(gauged_plane_wave):
    field, _, pp = gauged_plane_wave
    assert np.max(np.abs(field_strength(field, pp, X))) <= 1e-8


def test_continuity_of_constant_field():
    pp = PhysicalParams(1.0, 0.8)
    vec, ax = continuity_residuals(constant_bilinear_field(1.0, 0.0, [1, 0, 0, 0], [0, 0, 0, 1]), pp, X)
    assert np.all(vec == 0) and np.all(ax == 0)
    w = 0.3
    vec, ax = continuity_residuals(constant_bilinear_field(1.0, 1j * w, [1, 0, 0, 0], [0, 0, 0, 1]), pp, X)
    assert np.all(vec == 0)
    assert np.allclose(ax, -2 * pp.mass * w, atol=1e-15)


def test_continuity_on_exact_solution():
    field, _, pp = make_gauged_plane_wave(21)
    vec, ax = continuity_residuals(field, pp, X)
    assert np.max(np.abs(vec)) <= 1e-9 and np.max(np.abs(ax)) <= 1e-9


@pytest.fixture(scope="module")
def spherical_case():
    rng = np.random.default_rng(30)
    p = random_spherical_profile(rng, branch=1)
    pp = PhysicalParams(1.1, 0.6)
    x = np.array([[0.2, 0.5, 0.4, -0.6], [-0.3, -0.7, 0.3, 0.5]])
    return p, pp, x


def test_lifted_spherical_field_strength_matches_reduced_tensor(spherical_case):
    p, pp, x = spherical_case
    f = field_strength(p.lift(), pp, x)
    assert np.max(np.abs(f - spherical_field_tensor(p, pp, x))) <= 1e-7


def test_field_strength_converges_at_fourth_order(spherical_case):
    p, pp, x = spherical_case
    ref = spherical_field_tensor(p, pp, x)
    errs = [np.max(np.abs(field_strength(p.lift(), pp, x, DiffEngine(mode="central", h=h)) - ref))
            for h in (4e-2, 2e-2)]
    assert errs[0] / errs[1] >= 12.8


def test_monopole_component_of_lifted_field(spherical_case):
    p, pp, x = spherical_case
    f = field_strength(p.lift(), pp, x)
    r = np.linalg.norm(x[:, 1:], axis=-1)
    # the z-directed magnetic part F_12 carries the z/r of the radial monopole
    ratio = f[:, 1, 2] - spherical_field_tensor(p, pp, x, include_monopole=False)[:, 1, 2]
    assert np.allclose(np.abs(ratio * 2 * pp.q * r ** 3 / x[:, 3]), 1.0, atol=1e-6)


def test_maxwell_residual_matches_reduced_tensor_divergence(spherical_case):
    from fierz_md.reductions import spherical_tensor_maxwell
    p, pp, x = spherical_case
    ambient = maxwell_residual(p.lift(), pp, x)
    reduced = spherical_tensor_maxwell(p, pp, x)
    assert np.max(np.abs(ambient - reduced)) <= 1e-4
