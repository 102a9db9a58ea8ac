import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultrastrong.hilbert import (
    DensityMatrix,
    FockCutoff,
    StateVector,
    as_density,
    commutator,
    dense,
    expectation,
    fock_state,
    ladder_ops,
    number_ops,
    parity_op,
    partial_transpose_b,
    random_density_matrix,
    top_shell_population,
    vacuum,
)
from ultrastrong.model import build_hamiltonian, degenerate


def bell_state(cutoff):
    amps = np.zeros(cutoff.dim, dtype=complex)
    amps[cutoff.index(0, 0)] = amps[cutoff.index(1, 1)] = 1 / math.sqrt(2)
    return StateVector(cutoff, amps)


class TestFockCutoff:
    def test_rejects_single_level(self):
        with pytest.raises(ValueError, match="n_a"):
            FockCutoff(1, 3)

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError, match="n_b"):
            FockCutoff(3, 2.5)

    @given(st.integers(2, 9), st.integers(2, 9))
    def test_index_round_trip(self, na, nb):
        c = FockCutoff(na, nb)
        for m in range(na):
            for n in range(nb):
                k = c.index(m, n)
                assert k == m * nb + n
                assert c.levels(k) == (m, n)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            FockCutoff(3, 3).index(3, 0)


class TestLadder:
    def test_lowering_one_quantum(self):
        c = FockCutoff(2, 2)
        a, _, _, _ = ladder_ops(c)
        out = a @ fock_state(c, 1, 0).amps
        assert np.allclose(out, vacuum(c).amps)

    def test_raising_amplitude(self):
        c = FockCutoff(4, 4)
        _, adag, _, _ = ladder_ops(c)
        out = adag @ fock_state(c, 2, 0).amps
        assert np.allclose(out, math.sqrt(3) * fock_state(c, 3, 0).amps)

    def test_raising_out_of_top_level_is_zero(self):
        c = FockCutoff(3, 3)
        _, adag, _, bdag = ladder_ops(c)
        assert np.all(adag @ fock_state(c, 2, 1).amps == 0)
        assert np.all(bdag @ fock_state(c, 1, 2).amps == 0)

    def test_commutator_identity_below_top(self):
        c = FockCutoff(3, 3)
        a, adag, b, bdag = ladder_ops(c)
        m, n = c.grids()
        for x, xd, lev, top in ((a, adag, m, c.n_a), (b, bdag, n, c.n_b)):
            comm = dense(commutator(x, xd))
            keep = lev < top - 1
            assert np.allclose(comm[np.ix_(keep, keep)], np.eye(keep.sum()), atol=1e-14)
            # the truncation shows up on the top level only
            assert not np.allclose(comm, np.eye(c.dim))

    def test_different_modes_commute(self):
        a, adag, b, bdag = ladder_ops(FockCutoff(5, 4))
        assert abs(commutator(a, b)).max() == 0
        assert abs(commutator(a, bdag)).max() == 0

    def test_number_operators(self):
        c = FockCutoff(4, 3)
        a, adag, b, bdag = ladder_ops(c)
        na, nb = number_ops(c)
        assert np.allclose(dense(adag @ a), dense(na))
        assert np.allclose(dense(bdag @ b), dense(nb))


class TestParity:
    def test_vacuum_even(self):
        c = FockCutoff(3, 3)
        assert np.allclose(parity_op(c) @ vacuum(c).amps, vacuum(c).amps)

    def test_odd_state(self):
        c = FockCutoff(3, 3)
        psi = fock_state(c, 2, 1).amps
        assert np.allclose(parity_op(c) @ psi, -psi)

    def test_involution_and_hermitian(self):
        P = dense(parity_op(FockCutoff(4, 5)))
        assert np.allclose(P @ P, np.eye(20))
        assert np.allclose(P, P.conj().T)

    def test_hamiltonian_parity_invariant(self):
        c = FockCutoff(8, 8)
        P = dense(parity_op(c))
        H = dense(build_hamiltonian(degenerate(0.2), c))
        assert np.max(np.abs(P.T @ H @ P - H)) < 1e-12


class TestExpectation:
    def test_vacuum_number(self):
        c = FockCutoff(3, 3)
        na, _ = number_ops(c)
        assert expectation(na, vacuum(c)) == 0

    def test_total_number(self):
        c = FockCutoff(3, 3)
        na, nb = number_ops(c)
        assert expectation(na + nb, fock_state(c, 1, 1)) == pytest.approx(2)

    def test_parity_trace(self):
        c = FockCutoff(3, 3)
        rho = vacuum(c).to_density()
        assert expectation(parity_op(c), rho) == pytest.approx(1)

    def test_sparse_and_dense_agree(self):
        c = FockCutoff(4, 3)
        rho = random_density_matrix(c, np.random.default_rng(1))
        op = ladder_ops(c)[0] + ladder_ops(c)[3]
        assert expectation(op, rho) == pytest.approx(expectation(op.toarray(), rho), abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            expectation(np.eye(4), vacuum(FockCutoff(3, 3)))

    def test_hermitian_expectation_is_real(self):
        c = FockCutoff(5, 5)
        rho = random_density_matrix(c, np.random.default_rng(2))
        a, adag, _, _ = ladder_ops(c)
        assert abs(expectation(a + adag, rho).imag) < 1e-10


class TestStates:
    def test_state_length_checked(self):
        with pytest.raises(ValueError, match="amps"):
            StateVector(FockCutoff(2, 2), np.ones(3))

    def test_density_checks(self):
        c = FockCutoff(2, 2)
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(c, 2 * np.eye(4) / 4).check_physical()
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix(c, np.triu(np.ones((4, 4))) / 4).check_physical()
        with pytest.raises(ValueError, match="negative"):
            DensityMatrix(c, np.diag([1.5, -0.5, 0, 0])).check_physical()

    def test_random_density_is_physical(self):
        c = FockCutoff(3, 4)
        rho = random_density_matrix(c, np.random.default_rng(3), rank=2)
        rho.check_physical()
        assert np.linalg.matrix_rank(rho.matrix, tol=1e-10) == 2

    def test_top_shell_population(self):
        c = FockCutoff(5, 5)
        assert top_shell_population(vacuum(c)) == 0
        assert top_shell_population(fock_state(c, 0, 3)) == 1
        assert top_shell_population(fock_state(c, 2, 2).to_density()) == 0


class TestPartialTranspose:
    def test_product_state_fixed(self):
        c = FockCutoff(2, 2)
        rho = fock_state(c, 0, 1).to_density()
        assert np.array_equal(partial_transpose_b(rho), rho.matrix)

    def test_bell_state_negative_eigenvalue(self):
        c = FockCutoff(2, 2)
        w = np.linalg.eigvalsh(partial_transpose_b(bell_state(c).to_density()))
        assert np.allclose(sorted(w), [-0.5, 0.5, 0.5, 0.5])

    def test_element_map(self):
        c = FockCutoff(3, 2)
        rho = random_density_matrix(c, np.random.default_rng(4))
        pt = partial_transpose_b(rho).reshape(3, 2, 3, 2)
        t = rho.tensor
        for m, n, j, k in np.ndindex(3, 2, 3, 2):
            assert pt[m, n, j, k] == t[m, k, j, n]

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_involution_trace_hermitian(self, seed):
        c = FockCutoff(3, 3)
        rho = random_density_matrix(c, np.random.default_rng(seed))
        pt = partial_transpose_b(rho)
        assert np.allclose(pt, pt.conj().T, atol=1e-14)
        assert np.trace(pt) == pytest.approx(1)
        twice = partial_transpose_b(DensityMatrix(c, pt))
        assert np.array_equal(twice, rho.matrix)

    def test_as_density_rejects_other(self):
        with pytest.raises(TypeError):
            as_density(np.eye(4))
