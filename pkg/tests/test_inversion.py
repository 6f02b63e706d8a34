import numpy as np
import pytest

from conftest import make_gauged_plane_wave, make_polynomial_spinor_field, polynomial_gauge
from fierz_md.bilinears import (
    SpinorField, bilinears, gauge_transform, on_shell_momentum, on_shell_spinor, plane_wave_field,
)
from fierz_md.differentiation import DiffEngine
from fierz_md.dirac_algebra import ETA_DIAG, lower_index
from fierz_md.errors import DegenerateDensityError, SupportError
from fierz_md.inversion import (
    LEDGER_ENTRIES, PhysicalParams, bilinear_field_from_spinor, bilinearized_constraints,
    consistency_condition, constant_bilinear_field, gauge_dependent_part, gauge_invariant_B,
    gauge_invariant_B_sform, invert_A_combined, invert_A_pseudo, invert_A_scalar, invert_A_tensor,
    pack, unpack,
)

X = np.array([[0.1, -0.3, 0.2, 0.5], [-0.4, 0.2, 0.7, -0.1], [0.3, 0.3, -0.6, 0.2]])


def _constant_spinor(u):
    u = np.asarray(u, dtype=complex)
    return SpinorField(lambda x: np.broadcast_to(u, x.shape[:-1] + (4,)).copy(),
                       lambda x: np.zeros(x.shape[:-1] + (4, 4), complex))


def test_physical_params_validation():
    with pytest.raises(ValueError):
        PhysicalParams(q=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(q=1.0, mass=-1.0)


def test_pack_unpack_roundtrip():
    v = pack(1.0, 2j, [1, 2, 3, 4], [5, 6, 7, 8])
    s, o, j, k = unpack(v)
    assert s == 1 and o == 2j and list(j) == [1, 2, 3, 4] and list(k) == [5, 6, 7, 8]


def test_free_rest_frame_wave_inverts_to_zero_potential():
    m = 0.8
    u = np.array([1, 0, 0, 0], complex) * np.sqrt(2 * m)
    field = plane_wave_field([(1.0, np.array([m, 0, 0, 0]), u, 1.0)])
    a = invert_A_scalar(field, PhysicalParams(1.0, m), X)
    assert np.max(np.abs(a)) <= 1e-14


def test_gauged_plane_wave_recovers_potential(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    assert np.max(np.abs(invert_A_scalar(field, pp, X) - a)) <= 1e-9
    fd = invert_A_scalar(field, pp, X, DiffEngine(mode="central", h=1e-3))
    assert np.max(np.abs(fd - a)) <= 1e-6


def test_single_mode_has_vanishing_pseudoscalar():
    field, _, pp = make_gauged_plane_wave(3, mixed=False)
    assert np.max(np.abs(field.bilinears(X).omega)) <= 1e-14
    with pytest.raises(SupportError):
        invert_A_pseudo(field, pp, X)


def test_scalar_form_requires_nonzero_sigma():
    field = _constant_spinor([1, 0, 1, 0])
    with pytest.raises(SupportError):
        invert_A_scalar(field, PhysicalParams(), X)


def test_pseudo_form_requires_nonzero_omega():
    with pytest.raises(SupportError):
        invert_A_pseudo(_constant_spinor([1, 0, 0, 0]), PhysicalParams(), X)


def test_both_inverted_forms_agree(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    scalar = invert_A_scalar(field, pp, X)
    pseudo = invert_A_pseudo(field, pp, X)
    assert np.max(np.abs(scalar - pseudo)) <= 1e-9
    assert np.max(np.abs(pseudo - a)) <= 1e-9


def test_free_mixed_wave_inverts_to_zero():
    rng = np.random.default_rng(4)
    from fierz_md.bilinears import random_plane_wave_modes
    field = plane_wave_field(random_plane_wave_modes(rng, 1.0), a=np.zeros(4))
    assert np.max(np.abs(invert_A_pseudo(field, PhysicalParams(1.0, 1.0), X))) <= 1e-12


def test_combined_form_is_mean_of_both():
    field = make_polynomial_spinor_field(5)
    pp = PhysicalParams(1.3, 0.4)
    mean = 0.5 * (invert_A_scalar(field, pp, X) + invert_A_pseudo(field, pp, X))
    assert np.allclose(invert_A_combined(field, pp, X), mean, atol=1e-12)


def test_consistency_condition_on_solution_and_detector(gauged_plane_wave):
    field, _, pp = gauged_plane_wave
    assert np.max(np.abs(consistency_condition(field, pp, X))) <= 1e-9
    generic = make_polynomial_spinor_field(6)
    assert np.max(np.abs(consistency_condition(generic, pp, X))) > 1e-3


def test_consistency_condition_degenerate_constant_spinor():
    res = consistency_condition(_constant_spinor([1, 0, 0, 0]), PhysicalParams(1.0, 0.7), X)
    assert np.max(np.abs(res)) == 0.0


def test_B_of_constant_bilinear_field_is_mass_term():
    sig, om, j, k = 1.3, 0.4j, np.array([2.0, 0.3, -0.1, 0.2]), np.array([0.1, 0.2, 0.3, 1.0])
    pp = PhysicalParams(0.9, 0.6)
    b = gauge_invariant_B(constant_bilinear_field(sig, om, j, k), pp, X)
    expected = -pp.mass * sig * j / (pp.q * (sig ** 2 - om ** 2))
    assert np.allclose(b, expected, atol=1e-15)


def test_B_degenerate_density_raises():
    field = constant_bilinear_field(1.0, 1.0, [1, 0, 0, 0], [0, 0, 0, 1])
    with pytest.raises(DegenerateDensityError):
        gauge_invariant_B(field, PhysicalParams(), X)


def test_A_minus_B_is_gauge_dependent_part(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    b = gauge_invariant_B(field, pp, X)
    assert np.max(np.abs(a - b - gauge_dependent_part(field, pp, X))) <= 1e-9


def test_B_forms_agree_on_spinor_fields():
    for seed in range(3):
        field = make_polynomial_spinor_field(seed)
        pp = PhysicalParams(1.1, 0.5)
        eps_form = gauge_invariant_B(field, pp, X)
        s_form = gauge_invariant_B_sform(field, pp, X)
        assert np.max(np.abs(eps_form - s_form)) <= 1e-9


def test_B_from_bilinear_field_equals_B_from_spinor():
    field = make_polynomial_spinor_field(7)
    pp = PhysicalParams(0.7, 1.2)
    direct = gauge_invariant_B(field, pp, X)
    via = gauge_invariant_B(bilinear_field_from_spinor(field), pp, X)
    assert np.allclose(direct, via, atol=1e-13)


def test_tensor_inversion_equals_scalar_on_solution(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    assert np.max(np.abs(invert_A_tensor(field, pp, X) - a)) <= 1e-9


def test_gauge_equivalent_fields_share_B_and_shift_A():
    field, a, pp = make_gauged_plane_wave(12)

    def theta(x):
        return 0.3 * x[..., 1]

    def grad(x):
        return np.broadcast_to(np.array([0.0, 0.3, 0.0, 0.0]), x.shape).copy()

    gauged = gauge_transform(field, theta, grad, pp.q)
    assert np.max(np.abs(gauge_invariant_B(field, pp, X) - gauge_invariant_B(gauged, pp, X))) <= 1e-9
    shift = invert_A_scalar(gauged, pp, X) - invert_A_scalar(field, pp, X)
    # psi -> exp(i q theta) psi moves A^mu by -d^mu theta
    assert np.allclose(shift, -ETA_DIAG * grad(X), atol=1e-9)


def test_ledger_vanishes_on_exact_solution(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    for x in X:
        res = bilinearized_constraints(field, lambda y: a, pp, x)
        assert set(res) == set(LEDGER_ENTRIES)
        assert all(v <= 1e-9 for v in res.values())


def test_ledger_continuity_for_free_wave():
    m = 1.0
    p = on_shell_momentum([0.3, -0.2, 0.5], m)
    u = on_shell_spinor(p, m, np.array([1, 0.5, 0, 0.2j]))
    field = plane_wave_field([(1.0, p, u, 1.0)])
    res = bilinearized_constraints(field, lambda y: np.zeros(4), PhysicalParams(1.0, m), X[0])
    assert res["vector_continuity"] <= 1e-14
    assert res["axial_continuity"] <= 1e-14
    assert res["pseudo_inversion"] is None   # omega = 0 for a single mode


def test_ledger_detects_wrong_potential(gauged_plane_wave):
    field, a, pp = gauged_plane_wave
    delta = np.array([0.01, -0.02, 0.005, 0.0])
    res = bilinearized_constraints(field, lambda y: a + delta, pp, X[0])
    j = field.bilinears(X[0]).j.real
    assert res["vector_coupling"] == pytest.approx(abs(lower_index(delta) @ j), rel=1e-6)
