"""
Eigensystem of the coupled oscillators and the transforms that diagonalize it.

Two independent routes reach the ground state: the lowest eigenvector of the
truncated Hamiltonian, and the product ``U^dag S_a S_b |0,0>`` of the
rotation and squeezing matrices. In the degenerate case a third route sums
the number-state expansion of the same product term by term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
from scipy.special import gammaln

from .exceptions import UnsupportedCaseError
from .hilbert import (
    StateVector,
    dense,
    hermiticity_error,
    ladder_ops,
    parity_mask,
    vacuum,
)
from .model import build_hamiltonian, normal_mode_analysis

PHASE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """
    Ascending energies with eigenvectors as columns of ``vectors``.

    Eigenvectors are computed per parity sector, so each carries an exact
    parity label.
    """

    cutoff: object
    energies: np.ndarray
    vectors: np.ndarray
    parity: np.ndarray

    def __len__(self):
        return self.energies.size

    def state(self, k):
        return StateVector(self.cutoff, self.vectors[:, k])

    @property
    def states(self):
        return [self.state(k) for k in range(len(self))]

    def gaps(self):
        return self.energies - self.energies[0]


def diagonalize(H, cutoff, n_states=None):
    """
    Diagonalize a parity-conserving Hermitian operator.

    Parameters
    ----------
    H : sparse or dense matrix
        Must commute with the parity operator of ``cutoff``.
    cutoff : FockCutoff
    n_states : int, optional
        Keep only the lowest ``n_states`` eigenpairs (computed per sector).

    Returns
    -------
    EigenSystem
    """
    err = hermiticity_error(H)
    if err > 1e-12:
        raise ValueError(f"H: not Hermitian (max |H - H^dag| = {err:.3e})")
    d = cutoff.dim
    Hd = dense(H)
    energies, vectors, parity = [], [], []
    for par in (+1, -1):
        idx = np.flatnonzero(parity_mask(cutoff, par))
        block = Hd[np.ix_(idx, idx)]
        leak = np.delete(Hd[idx], idx, axis=1)
        if leak.size and np.max(np.abs(leak)) > 1e-12:
            raise ValueError("H: does not conserve parity")
        k = idx.size if n_states is None else min(n_states, idx.size)
        w, v = la.eigh(block, subset_by_index=[0, k - 1])
        full = np.zeros((d, k), dtype=np.result_type(v, complex))
        full[idx] = v
        energies.append(w)
        vectors.append(full)
        parity.append(np.full(k, par))
    energies = np.concatenate(energies)
    order = np.argsort(energies, kind="stable")
    if n_states is not None:
        order = order[:n_states]
    vectors = np.concatenate(vectors, axis=1)[:, order]
    vectors = np.column_stack([fix_phase(v) for v in vectors.T]) if vectors.size else vectors
    return EigenSystem(cutoff, energies[order], vectors, np.concatenate(parity)[order])


def fix_phase(amps, tol=PHASE_TOL):
    """Rotate the global phase so the first non-negligible amplitude is real positive."""
    amps = np.asarray(amps, dtype=complex)
    big = np.flatnonzero(np.abs(amps) > tol * np.max(np.abs(amps)))
    if big.size == 0:
        return amps
    c = amps[big[0]]
    return amps * (abs(c) / c)


def analytic_energies(nm, max_total, include_zero_point=True):
    """
    ``E[m, n] = omega_A m + omega_B n (+ (omega_A + omega_B)/2)`` for
    ``m + n <= max_total``, as a dict keyed by ``(m, n)``.
    """
    zp = 0.5 * (nm.omega_A + nm.omega_B) if include_zero_point else 0.0
    return {
        (m, n): nm.omega_A * m + nm.omega_B * n + zp
        for m in range(max_total + 1)
        for n in range(max_total + 1 - m)
    }


def rotation_generator(p, cutoff, theta=None):
    """Anti-Hermitian generator of the mixing rotation ``U = exp(G)``."""
    a, adag, b, bdag = ladder_ops(cutoff)
    if theta is None:
        theta = normal_mode_analysis(p).theta
    root = math.sqrt(p.omega_a * p.omega_b)
    squeeze = 0.5 * theta * (p.omega_b - p.omega_a) / root
    mix = 0.5 * theta * (p.omega_b + p.omega_a) / root
    return squeeze * (adag @ bdag - a @ b) - mix * (adag @ b - a @ bdag)


def build_U(p, cutoff):
    """
    Mixing rotation in the bosonic form.

    Dense unitary (exactly unitary only on shells that fit inside the
    cutoff). For degenerate modes it reduces to the beam splitter
    ``exp[-theta (a^dag b - a b^dag)]``.
    """
    G = rotation_generator(p, cutoff)
    return la.expm(dense(G))


def _single_mode_squeezer(r, n):
    low = np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1)
    gen = 0.5 * r * (low @ low - low.T @ low.T)
    return la.expm(gen)


def build_squeezers(p, cutoff):
    """
    ``S_a = exp[r_a (a^2 - a^dag^2)/2]`` and ``S_b`` likewise, as dense matrices.

    Each acts on a single mode, so the exponential is taken in that mode and
    lifted with a Kronecker product.
    """
    nm = normal_mode_analysis(p)
    Sa = np.kron(_single_mode_squeezer(nm.r_a, cutoff.n_a), np.eye(cutoff.n_b))
    Sb = np.kron(np.eye(cutoff.n_a), _single_mode_squeezer(nm.r_b, cutoff.n_b))
    return Sa, Sb


def ground_state_numeric(p, cutoff):
    """Lowest eigenvector of the full Hamiltonian, phase-fixed (``C_00 > 0``)."""
    es = diagonalize(build_hamiltonian(p, cutoff), cutoff, n_states=1)
    return es.state(0)


def ground_state_transform(p, cutoff):
    """``U^dag S_a S_b |0,0>`` by matrix products, phase-fixed."""
    U = build_U(p, cutoff)
    Sa, Sb = build_squeezers(p, cutoff)
    psi = U.conj().T @ (Sa @ (Sb @ vacuum(cutoff).amps))
    psi /= np.linalg.norm(psi)
    return StateVector(cutoff, fix_phase(psi))


def _require_degenerate(p, what):
    if not p.is_degenerate:
        raise UnsupportedCaseError(
            f"{what}: closed form exists only for omega_a == omega_b "
            f"(got {p.omega_a!r}, {p.omega_b!r})"
        )


def ground_state_analytic_degenerate(p, cutoff):
    r"""
    Number-state expansion of the ground state for ``omega_a == omega_b``.

    The squeezed vacua ``S|0> = sech^{1/2} r \sum_m \sqrt{(2m)!}/m! (-tanh r / 2)^m |2m>``
    are pushed through the 50:50 mixer, written in normal-ordered form
    ``exp(t a^dag b) 2^{(a^dag a - b^dag b)/2} exp(-t a b^dag)`` with
    ``t = tan(theta) = +-1``. The sum over input pairs ``(2m, 2n)`` is cut where
    the output shell ``2m + 2n`` leaves the cutoff; the result is normalized
    and phase-fixed. Terms are accumulated in log space.
    """
    _require_degenerate(p, "ground_state_analytic_degenerate")
    nm = normal_mode_analysis(p)
    n_a, n_b = cutoff.shape
    t_a, t_b = math.tanh(nm.r_a), math.tanh(nm.r_b)
    tau = 1.0 if nm.theta >= 0 else -1.0
    amps = np.zeros((n_a, n_b))
    lf = lambda k: gammaln(np.asarray(k, dtype=float) + 1.0)
    max_shell = (n_a - 1) + (n_b - 1)

    def squeeze_factor(k, t):
        # log|sqrt((2k)!)/k! (t/2)^k| and its sign
        if k == 0:
            return 0.0, 1.0
        if t == 0.0:
            return -np.inf, 0.0
        return 0.5 * lf(2 * k) - lf(k) + k * math.log(abs(t) / 2), (-np.sign(t)) ** k

    for m in range(max_shell // 2 + 1):
        lsa, sga = squeeze_factor(m, t_a)
        if sga == 0.0:
            break
        for n in range(max_shell // 2 - m + 1):
            lsb, sgb = squeeze_factor(n, t_b)
            if sgb == 0.0:
                break
            base = lsa + lsb
            for l in range(2 * m + 1):
                ia, ib = 2 * m - l, 2 * n + l
                s = np.arange(ib + 1)
                out_a, out_b = ia + s, ib - s
                keep = (out_a < n_a) & (out_b < n_b)
                if not keep.any():
                    continue
                s, out_a, out_b = s[keep], out_a[keep], out_b[keep]
                log_l = -lf(l) + 0.5 * (lf(2 * m) - lf(ia)) + 0.5 * (lf(ib) - lf(2 * n))
                log_l += (m - n - l) * math.log(2.0)
                log_s = -lf(s) + 0.5 * (lf(out_a) - lf(ia)) + 0.5 * (lf(ib) - lf(out_b))
                sign = sga * sgb * (-tau) ** l * tau**s
                np.add.at(amps, (out_a, out_b), sign * np.exp(base + log_l + log_s))
    vec = amps.reshape(-1).astype(complex)
    vec /= np.linalg.norm(vec)
    return StateVector(cutoff, fix_phase(vec))


def ground_excitations_analytic(p):
    """``<a^dag a> = <b^dag b> = (sinh^2 r_a + sinh^2 r_b) / 2`` at degeneracy."""
    _require_degenerate(p, "ground_excitations_analytic")
    nm = normal_mode_analysis(p)
    return 0.5 * (math.sinh(nm.r_a) ** 2 + math.sinh(nm.r_b) ** 2)


def transform_to_normal_frame(p, cutoff, H=None):
    """``S_b^dag S_a^dag U H U^dag S_a S_b``; diagonal on interior levels."""
    if H is None:
        H = build_hamiltonian(p, cutoff)
    U = build_U(p, cutoff)
    Sa, Sb = build_squeezers(p, cutoff)
    W = U.conj().T @ Sa @ Sb
    Hd = H.toarray() if sp.issparse(H) else H
    return W.conj().T @ Hd @ W
