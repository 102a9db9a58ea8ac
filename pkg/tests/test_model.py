import math
import warnings
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import crop
from ultrastrong.exceptions import InstabilityError
from ultrastrong.hilbert import FockCutoff, dense, ladder_ops, number_ops, vacuum
from ultrastrong.model import (
    MechanicalParams,
    ModelParams,
    build_hamiltonian,
    build_rwa_hamiltonian,
    degenerate,
    from_mechanical,
    normal_mode_analysis,
)
from ultrastrong.spectrum import build_squeezers, build_U

stable_params = st.builds(
    lambda wa, wb, frac: ModelParams(wa, wb, frac * 0.5 * math.sqrt(wa * wb)),
    st.floats(0.3, 3.0),
    st.floats(0.3, 3.0),
    st.floats(-0.95, 0.95),
)


class TestValidation:
    @pytest.mark.parametrize("field, kwargs", [
        ("omega_a", dict(omega_a=0.0)),
        ("omega_b", dict(omega_b=-1.0)),
        ("gamma_a", dict(gamma_a=-0.1)),
        ("gamma_b", dict(gamma_b=float("nan"))),
        ("g", dict(g=float("inf"))),
    ])
    def test_bad_fields_named(self, field, kwargs):
        base = dict(omega_a=1.0, omega_b=1.0, g=0.1)
        base.update(kwargs)
        with pytest.raises(ValueError, match=field):
            ModelParams(**base)

    def test_instability_carries_critical_coupling(self):
        with pytest.raises(InstabilityError) as info:
            ModelParams(1.0, 4.0, 1.0)
        assert info.value.g_critical == pytest.approx(1.0)
        assert "g_c" in str(info.value)

    def test_allow_critical_warns(self):
        with pytest.warns(RuntimeWarning, match="critical"):
            p = degenerate(0.5, allow_critical=True)
        assert not p.is_stable
        with pytest.raises(InstabilityError):
            normal_mode_analysis(p)

    def test_critical_hamiltonian_still_builds(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            p = degenerate(0.5, allow_critical=True)
        H = build_hamiltonian(p, FockCutoff(4, 4))
        assert H.shape == (16, 16)

    def test_mechanical_validation(self):
        with pytest.raises(ValueError, match="mu"):
            MechanicalParams(0.0, 1.0, 1.0, 0.1)
        with pytest.raises(ValueError, match="eta"):
            MechanicalParams(1.0, 1.0, 1.0, -0.1)


class TestMechanicalMapping:
    def test_uncoupled(self):
        p = from_mechanical(MechanicalParams(1.0, 1.0, 1.0, 0.0))
        assert (p.omega_a, p.omega_b, p.g) == (1.0, 1.0, 0.0)

    def test_hand_values(self):
        p = from_mechanical(MechanicalParams(1.0, 1.0, 1.0, 0.1))
        assert p.omega_a == pytest.approx(math.sqrt(1.2), abs=1e-15)
        assert p.omega_b == pytest.approx(math.sqrt(1.2), abs=1e-15)
        # xi = 0.2, sqrt(omega_a omega_b) = sqrt(1.2)
        assert p.g == pytest.approx(-0.2 / (2 * math.sqrt(1.2)), abs=1e-15)
        assert p.gamma_a == p.gamma_b == 0

    @given(
        st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(0.0, 50.0)
    )
    def test_always_stable(self, mu, w1, w2, eta):
        p = from_mechanical(MechanicalParams(mu, w1, w2, eta))
        assert 2 * abs(p.g) < math.sqrt(p.omega_a * p.omega_b)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_direct_quantization(self, seed):
        rng = np.random.default_rng(seed)
        mu, w1, w2 = rng.uniform(0.5, 2.0, size=3)
        eta = rng.uniform(0.0, 0.5)
        p = from_mechanical(MechanicalParams(mu, w1, w2, eta))
        p = ModelParams(p.omega_a, p.omega_b, p.g, include_constant=True)
        c = FockCutoff(12, 12)
        a, adag, b, bdag = (dense(o) for o in ladder_ops(c))
        # positions and momenta in the oscillator basis of omega_a, omega_b
        x1 = (a + adag) / math.sqrt(2 * mu * p.omega_a)
        x2 = (b + bdag) / math.sqrt(2 * mu * p.omega_b)
        p1 = 1j * math.sqrt(mu * p.omega_a / 2) * (adag - a)
        p2 = 1j * math.sqrt(mu * p.omega_b / 2) * (bdag - b)
        H_mech = (
            (p1 @ p1 + p2 @ p2) / (2 * mu)
            + 0.5 * mu * (w1**2 * x1 @ x1 + w2**2 * x2 @ x2)
            + eta * (x1 - x2) @ (x1 - x2)
        )
        H = dense(build_hamiltonian(p, c))
        # squares of x and p are wrong on the top level; compare below it
        assert np.max(np.abs(crop(H_mech - H, c, 11))) < 1e-10


class TestHamiltonian:
    def test_free(self):
        c = FockCutoff(4, 3)
        p = ModelParams(1.3, 0.7, 0.0)
        m, n = c.grids()
        H = dense(build_hamiltonian(p, c))
        assert np.allclose(H, np.diag(1.3 * m + 0.7 * n))
        Hc = dense(build_hamiltonian(ModelParams(1.3, 0.7, 0.0, include_constant=True), c))
        assert np.allclose(Hc - H, np.eye(c.dim))

    def test_counter_rotating_element(self):
        c = FockCutoff(3, 3)
        H = dense(build_hamiltonian(degenerate(0.2), c))
        assert H[c.index(0, 0), c.index(1, 1)] == pytest.approx(0.2)
        assert H[c.index(1, 0), c.index(0, 1)] == pytest.approx(0.2)
        assert H[c.index(2, 1), c.index(1, 0)] == pytest.approx(0.2 * math.sqrt(2))

    def test_hermitian(self):
        H = build_hamiltonian(ModelParams(1.1, 0.9, -0.3), FockCutoff(6, 5))
        assert abs(H - H.conj().T).max() == 0

    def test_cutoff_type_checked(self):
        with pytest.raises(TypeError, match="cutoff"):
            build_hamiltonian(degenerate(0.1), (3, 3))


class TestRWA:
    def test_conserves_excitations(self):
        c = FockCutoff(6, 6)
        H = dense(build_rwa_hamiltonian(degenerate(0.3), c))
        na, nb = number_ops(c)
        N = dense(na + nb)
        assert np.max(np.abs(H @ N - N @ H)) < 1e-12

    def test_no_counter_rotating_element(self):
        c = FockCutoff(3, 3)
        H = dense(build_rwa_hamiltonian(degenerate(0.2), c))
        assert H[c.index(0, 0), c.index(1, 1)] == 0

    def test_vacuum_ground_state(self):
        c = FockCutoff(6, 6)
        w, v = np.linalg.eigh(dense(build_rwa_hamiltonian(degenerate(0.45), c)))
        assert abs(abs(v[:, 0] @ vacuum(c).amps) - 1) < 1e-12

    def test_single_excitation_splitting(self):
        c = FockCutoff(3, 3)
        H = dense(build_rwa_hamiltonian(degenerate(0.2), c))
        k = [c.index(1, 0), c.index(0, 1)]
        assert np.allclose(np.linalg.eigvalsh(H[np.ix_(k, k)]), [0.8, 1.2])


class TestNormalModes:
    def test_degenerate_hand_values(self):
        nm = normal_mode_analysis(degenerate(0.2))
        assert abs(nm.omega_A - math.sqrt(1.4)) < 1e-12
        assert abs(nm.omega_B - math.sqrt(0.6)) < 1e-12
        assert abs(nm.r_a - 0.25 * math.log(1.4)) < 1e-12
        assert abs(nm.r_b - 0.25 * math.log(0.6)) < 1e-12
        assert nm.omega_A == pytest.approx(1.183216, abs=1e-6)
        assert nm.omega_B == pytest.approx(0.774597, abs=1e-6)
        assert nm.r_a == pytest.approx(0.084118, abs=1e-6)
        assert nm.r_b == pytest.approx(-0.127706, abs=1e-6)
        assert nm.xi == pytest.approx(-0.4)
        assert nm.g_a == pytest.approx(0.1)
        assert nm.g_b == pytest.approx(-0.1)

    def test_degenerate_angle(self):
        assert normal_mode_analysis(degenerate(-0.2)).theta == pytest.approx(math.pi / 4)
        assert normal_mode_analysis(degenerate(0.2)).theta == pytest.approx(-math.pi / 4)

    @settings(max_examples=200)
    @given(stable_params)
    def test_invariants(self, p):
        nm = normal_mode_analysis(p)
        wa, wb = p.omega_a, p.omega_b
        assert nm.omega_A >= nm.omega_B > 0
        assert abs(nm.omega_A**2 + nm.omega_B**2 - wa**2 - wb**2) < 1e-12 * max(1.0, wa**2 + wb**2)
        det = wa**2 * wb**2 - nm.xi**2
        assert abs(nm.omega_A**2 * nm.omega_B**2 - det) <= 1e-10 * wa**2 * wb**2
        assert nm.r_a == 0.5 * math.log(nm.omega_A / wa)
        assert nm.r_b == 0.5 * math.log(nm.omega_B / wb)

    def test_uncoupled_limit(self):
        for wa, wb in ((1.3, 0.7), (0.7, 1.3)):
            nm = normal_mode_analysis(ModelParams(wa, wb, 0.0, gamma_a=0.02, gamma_b=0.05))
            assert nm.omega_A == max(wa, wb) and nm.omega_B == min(wa, wb)
            assert nm.g_a == pytest.approx(0.25 * (nm.omega_A**2 / wa - wa))
            stiff, soft = (0.02, 0.05) if wa > wb else (0.05, 0.02)
            assert nm.alpha_1 == pytest.approx(stiff, abs=1e-15)
            assert nm.alpha_2 == pytest.approx(soft, abs=1e-15)
        nm = normal_mode_analysis(degenerate(0.0))
        assert nm.r_a == nm.r_b == 0
        assert nm.f[0] == nm.f[6] == 1

    def test_rates_positive(self):
        nm = normal_mode_analysis(degenerate(0.2, gamma=0.01))
        assert nm.alpha_1 > 0 and nm.alpha_2 > 0
        # weights of the A and B position quadratures in x_a, x_b
        assert nm.alpha_1 == pytest.approx(0.01 * math.sqrt(1 / 1.4), rel=1e-12)
        assert nm.alpha_2 == pytest.approx(0.01 * math.sqrt(1 / 0.6), rel=1e-12)

    def test_coupled_beyond_critical(self):
        with pytest.raises(InstabilityError):
            normal_mode_analysis(degenerate(0.5))

    def test_as_dict_flat(self):
        d = normal_mode_analysis(degenerate(0.2, gamma=0.01)).as_dict()
        assert {"f1", "f8", "F1", "F8", "beta1", "beta10", "alpha_1", "omega_A"} <= set(d)
        assert all(isinstance(v, float) for v in d.values())


def normal_ops(p, cutoff):
    """Bare-basis matrices of the normal-mode operators ``A = S_a a S_a^dag`` and ``B``."""
    a, _, b, _ = (dense(o) for o in ladder_ops(cutoff))
    Sa, Sb = build_squeezers(p, cutoff)
    return Sa @ a @ Sa.conj().T, Sb @ b @ Sb.conj().T


@lru_cache(maxsize=None)
def frame(p, cutoff):
    """Dense bare ladder operators, ``U`` and the normal-mode operators."""
    ops = [dense(o) for o in ladder_ops(cutoff)]
    return ops, build_U(p, cutoff), normal_ops(p, cutoff)


PARAMS = [degenerate(0.2), degenerate(-0.3), ModelParams(1.2, 0.8, 0.25), ModelParams(0.9, 1.4, -0.2)]


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_forward_coefficients(p, big_cutoff):
    """``U a U^dag`` and ``U b U^dag`` in terms of the normal-mode operators."""
    c = big_cutoff
    nm = normal_mode_analysis(p)
    f1, f2, f3, f4, f5, f6, f7, f8 = nm.f
    (a, _, b, _), U, (A, B) = frame(p, c)
    Ad, Bd = A.conj().T, B.conj().T
    lhs_a = U @ a @ U.conj().T
    lhs_b = U @ b @ U.conj().T
    assert np.max(np.abs(crop(lhs_a - (f1 * A + f2 * Ad + f3 * B + f4 * Bd), c, 6))) < 1e-9
    assert np.max(np.abs(crop(lhs_b - (-f5 * A - f6 * Ad + f7 * B + f8 * Bd), c, 6))) < 1e-9


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_inverse_coefficients(p, big_cutoff):
    """``U^dag A U`` and ``U^dag B U`` in terms of the bare operators."""
    c = big_cutoff
    nm = normal_mode_analysis(p)
    ops, U, (A, B) = frame(p, c)
    for X, coeffs in zip((A, B), nm.jump_coefficients()):
        lhs = U.conj().T @ X @ U
        rhs = sum(k * o for k, o in zip(coeffs, ops))
        assert np.max(np.abs(crop(lhs - rhs, c, 6))) < 1e-9


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_rotated_frame_hamiltonian(p, big_cutoff):
    """``U H U^dag`` is two independent single-mode squeezing problems with couplings g_a, g_b."""
    c = big_cutoff
    nm = normal_mode_analysis(p)
    (a, ad, b, bd), U, _ = frame(p, c)
    I = np.eye(c.dim)
    H = dense(build_hamiltonian(ModelParams(p.omega_a, p.omega_b, p.g, include_constant=True), c))
    wa, wb = p.omega_a, p.omega_b
    expected = (
        0.5 * (nm.omega_A**2 / wa + wa) * (ad @ a + 0.5 * I)
        + nm.g_a * (ad @ ad + a @ a)
        + 0.5 * (nm.omega_B**2 / wb + wb) * (bd @ b + 0.5 * I)
        + nm.g_b * (bd @ bd + b @ b)
    )
    assert np.max(np.abs(crop(U @ H @ U.conj().T - expected, c, 6))) < 1e-9
