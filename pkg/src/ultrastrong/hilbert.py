"""
Truncated two-mode Fock space.

Basis state ``|m>_a |n>_b`` lives at composite index ``m * n_b + n`` (mode a
major). Every array exchanged between modules and every file written by the
CLI uses this layout.

Ladder and parity operators are returned as ``scipy.sparse.csr_matrix``; any
function taking an operator also accepts a dense ``ndarray``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class FockCutoff:
    """Levels ``0 .. n_a-1`` for mode a and ``0 .. n_b-1`` for mode b."""

    n_a: int
    n_b: int

    def __post_init__(self):
        for name in ("n_a", "n_b"):
            value = getattr(self, name)
            if int(value) != value or value < 2:
                raise ValueError(f"{name}: must be an integer >= 2, got {value!r}")
            object.__setattr__(self, name, int(value))

    @classmethod
    def square(cls, n):
        return cls(n, n)

    @property
    def dim(self):
        return self.n_a * self.n_b

    @property
    def shape(self):
        return (self.n_a, self.n_b)

    def index(self, m, n):
        if not (0 <= m < self.n_a and 0 <= n < self.n_b):
            raise IndexError(f"level ({m}, {n}) outside cutoff {self.shape}")
        return m * self.n_b + n

    def levels(self, k):
        """Inverse of :meth:`index`."""
        if not 0 <= k < self.dim:
            raise IndexError(f"composite index {k} outside dimension {self.dim}")
        return divmod(k, self.n_b)

    def grids(self):
        """Occupation numbers ``(m, n)`` of every basis state, flattened."""
        m, n = np.divmod(np.arange(self.dim), self.n_b)
        return m, n

    def grown(self, extra):
        return FockCutoff(self.n_a + extra, self.n_b + extra)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Pure state with amplitudes ``A[m, n]`` at composite index ``m*n_b + n``."""

    cutoff: FockCutoff
    amps: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if amps.size != self.cutoff.dim:
            raise ValueError(
                f"amps: length {amps.size} does not match cutoff dimension {self.cutoff.dim}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def grid(self):
        """Amplitudes reshaped to ``(n_a, n_b)``."""
        return self.amps.reshape(self.cutoff.shape)

    def norm(self):
        return float(np.linalg.norm(self.amps))

    def normalized(self):
        return StateVector(self.cutoff, self.amps / self.norm())

    def to_density(self):
        return DensityMatrix(self.cutoff, np.outer(self.amps, self.amps.conj()))

    def overlap(self, other):
        """``<self|other>``."""
        _check_same_cutoff(self.cutoff, other.cutoff)
        return complex(np.vdot(self.amps, other.amps))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Mixed state; ``rho[m*n_b + n, j*n_b + k] = <m,n|rho|j,k>``."""

    cutoff: FockCutoff
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        d = self.cutoff.dim
        if mat.shape != (d, d):
            raise ValueError(f"matrix: shape {mat.shape} does not match ({d}, {d})")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def tensor(self):
        """Elements as ``rho[m, n, j, k]``."""
        return self.matrix.reshape(self.cutoff.shape * 2)

    def trace(self):
        return complex(np.trace(self.matrix))

    def hermiticity_error(self):
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def min_eigenvalue(self):
        herm = 0.5 * (self.matrix + self.matrix.conj().T)
        return float(np.linalg.eigvalsh(herm)[0])

    def check_physical(self, herm_tol=1e-10, trace_tol=1e-8, pos_tol=1e-7):
        """Raise ``ValueError`` unless Hermitian, unit trace and positive within slack."""
        err = self.hermiticity_error()
        if err > herm_tol:
            raise ValueError(f"rho: not Hermitian (max |rho - rho^dag| = {err:.3e})")
        tr = self.trace()
        if abs(tr - 1) > trace_tol:
            raise ValueError(f"rho: trace {tr.real:.12g} differs from 1")
        lam = self.min_eigenvalue()
        if lam < -pos_tol:
            raise ValueError(f"rho: negative eigenvalue {lam:.3e}")
        return self


def _check_same_cutoff(c1, c2):
    if c1 != c2:
        raise ValueError(f"cutoff mismatch: {c1.shape} vs {c2.shape}")


@lru_cache(maxsize=64)
def _single_mode_lowering(n):
    return sp.diags(np.sqrt(np.arange(1, n, dtype=float)), 1, shape=(n, n), format="csr")


def ladder_ops(cutoff):
    """
    Annihilation and creation operators of both modes.

    Parameters
    ----------
    cutoff : FockCutoff

    Returns
    -------
    a, adag, b, bdag : scipy.sparse.csr_matrix
        ``d x d`` matrices with ``d = n_a * n_b``. Raising out of the top level
        gives zero, so ``[a, a^dag] = 1`` fails on the top level only.
    """
    la = _single_mode_lowering(cutoff.n_a)
    lb = _single_mode_lowering(cutoff.n_b)
    a = sp.kron(la, sp.identity(cutoff.n_b), format="csr")
    b = sp.kron(sp.identity(cutoff.n_a), lb, format="csr")
    return a, a.T.tocsr(), b, b.T.tocsr()


def number_ops(cutoff):
    """Diagonal ``a^dag a`` and ``b^dag b``."""
    m, n = cutoff.grids()
    return sp.diags(m.astype(float), format="csr"), sp.diags(n.astype(float), format="csr")


def parity_op(cutoff):
    """``(-1)^(a^dag a + b^dag b)`` as a diagonal sparse matrix."""
    m, n = cutoff.grids()
    return sp.diags(np.where((m + n) % 2 == 0, 1.0, -1.0), format="csr")


def parity_mask(cutoff, parity):
    """Boolean mask of basis states with the given parity (+1 or -1)."""
    m, n = cutoff.grids()
    even = (m + n) % 2 == 0
    return even if parity > 0 else ~even


def interior_mask(cutoff, margin=1):
    """Basis states at least ``margin`` levels below the top of both modes."""
    m, n = cutoff.grids()
    return (m < cutoff.n_a - margin) & (n < cutoff.n_b - margin)


def top_shell_population(state, shells=2):
    """Probability carried by the top ``shells`` levels of either mode."""
    cutoff = state.cutoff
    m, n = cutoff.grids()
    top = (m >= cutoff.n_a - shells) | (n >= cutoff.n_b - shells)
    if isinstance(state, StateVector):
        return float(np.sum(np.abs(state.amps[top]) ** 2))
    return float(np.sum(np.real(np.diag(state.matrix))[top]))


def fock_state(cutoff, m, n):
    amps = np.zeros(cutoff.dim, dtype=complex)
    amps[cutoff.index(m, n)] = 1.0
    return StateVector(cutoff, amps)


def vacuum(cutoff):
    return fock_state(cutoff, 0, 0)


def dense(op):
    return op.toarray() if sp.issparse(op) else np.asarray(op)


def hermiticity_error(op):
    diff = op - op.conj().T
    if sp.issparse(diff):
        return float(abs(diff).max()) if diff.nnz else 0.0
    return float(np.max(np.abs(diff)))


def is_hermitian(op, tol=HERMITIAN_TOL):
    return hermiticity_error(op) < tol


def commutator(x, y):
    return x @ y - y @ x


def expectation(op, state):
    """
    ``<psi|op|psi>`` for a :class:`StateVector` or ``Tr[op rho]`` for a
    :class:`DensityMatrix`.

    Returns the complex value; callers drop the imaginary part for Hermitian
    ``op``.
    """
    d = state.cutoff.dim
    if op.shape != (d, d):
        raise ValueError(f"op: shape {op.shape} does not match state dimension {d}")
    if isinstance(state, StateVector):
        return complex(np.vdot(state.amps, op @ state.amps))
    if isinstance(state, DensityMatrix):
        if sp.issparse(op):
            # Tr[M rho] = sum_ij M_ij rho_ji
            coo = op.tocoo()
            return complex(np.sum(coo.data * state.matrix[coo.col, coo.row]))
        return complex(np.einsum("ij,ji->", op, state.matrix))
    raise TypeError(f"state: expected StateVector or DensityMatrix, got {type(state).__name__}")


def partial_transpose_b(rho):
    """
    Transpose the mode-b indices of ``rho``.

    Accepts a :class:`DensityMatrix` and returns the ``d x d`` ndarray with
    ``out[(m,n),(j,k)] = rho[(m,k),(j,n)]``.
    """
    n_a, n_b = rho.cutoff.shape
    t = rho.matrix.reshape(n_a, n_b, n_a, n_b).transpose(0, 3, 2, 1)
    return t.reshape(n_a * n_b, n_a * n_b)


def as_density(state):
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, StateVector):
        return state.to_density()
    raise TypeError(f"state: expected StateVector or DensityMatrix, got {type(state).__name__}")


def random_density_matrix(cutoff, rng, rank=None, support=None):
    """
    Random density matrix for tests and demos.

    ``support`` is an optional boolean mask restricting the range of ``rho``
    to a subset of basis states.
    """
    d = cutoff.dim
    idx = np.arange(d) if support is None else np.flatnonzero(support)
    k = idx.size if rank is None else rank
    x = rng.normal(size=(idx.size, k)) + 1j * rng.normal(size=(idx.size, k))
    small = x @ x.conj().T
    small /= np.trace(small).real
    mat = np.zeros((d, d), dtype=complex)
    mat[np.ix_(idx, idx)] = small
    return DensityMatrix(cutoff, mat)
