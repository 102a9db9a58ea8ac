"""
Time evolution in the truncated bare-mode basis.

Three engines share one fixed-step RK4 driver:

``closed``
    Schrodinger equation for the amplitudes ``A[m, n]``, written directly on
    the ``(n_a, n_b)`` grid.
``micro``
    Master equation derived in the normal-mode frame and mapped back to the
    bare modes. Its dissipator is a sum of bare-mode Lindblad and cross terms
    weighted by ``beta_1 .. beta_10``; it equals ``alpha_1 D[L_A] + alpha_2 D[L_B]``
    with ``L_A = U^dag A U`` and ``L_B = U^dag B U``.
``phenom``
    ``gamma_a D[a] + gamma_b D[b]`` added to the full Hamiltonian.

All baths are at zero temperature. The secular approximation behind the
``micro`` engine drops terms oscillating at ``omega_A +- omega_B``; it is
trustworthy when ``gamma << omega_A - omega_B``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .exceptions import CutoffSaturationError
from .hilbert import (
    DensityMatrix,
    StateVector,
    as_density,
    ladder_ops,
    top_shell_population,
)
from .measures import log_negativity
from .model import build_hamiltonian, build_rwa_hamiltonian, normal_mode_analysis
from .spectrum import build_U, build_squeezers

ENGINES = ("closed", "micro", "phenom")
MICRO_ROUTES = ("factored", "beta", "conjugation")
RESOLUTION_LIMIT = 0.05
SATURATION_THRESHOLD = 1e-6
# padding schedule of the conjugation route
PAD_STEP, MAX_PAD, PAD_TOL = 10, 80, 1e-13


@dataclass(frozen=True)
class EvolutionConfig:
    """
    Fixed-step integration settings.

    ``t_max`` is rounded to a whole number of steps of size ``dt``; a sample
    is recorded every ``record_every`` steps, plus the initial state.
    """

    t_max: float
    dt: float
    record_every: int = 1
    engine: str = "closed"

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"dt: must be > 0, got {self.dt!r}")
        if not (math.isfinite(self.t_max) and self.t_max >= self.dt):
            raise ValueError(f"t_max: must be >= dt = {self.dt}, got {self.t_max!r}")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise ValueError(f"record_every: must be a positive integer, got {self.record_every!r}")
        object.__setattr__(self, "record_every", int(self.record_every))
        if self.engine not in ENGINES:
            raise ValueError(f"engine: must be one of {ENGINES}, got {self.engine!r}")

    @property
    def n_steps(self):
        return max(1, int(round(self.t_max / self.dt)))

    def check_resolution(self, p):
        """Require ``dt * max(omega_a, omega_b, omega_A) <= 0.05``."""
        fastest = max(p.omega_a, p.omega_b)
        if p.is_stable:
            fastest = max(fastest, normal_mode_analysis(p).omega_A)
        if self.dt * fastest > RESOLUTION_LIMIT + 1e-12:
            raise ValueError(
                f"dt: dt * max frequency = {self.dt * fastest:.4g} exceeds {RESOLUTION_LIMIT}; "
                f"use dt <= {RESOLUTION_LIMIT / fastest:.4g}"
            )

    def halved(self):
        return EvolutionConfig(self.t_max, self.dt / 2, 2 * self.record_every, self.engine)


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    Observables sampled along a trajectory.

    ``norm_or_trace`` is the state norm for closed runs and ``Tr rho`` for
    master-equation runs. ``hermiticity`` and ``min_eigenvalue`` are NaN for
    closed runs.
    """

    times: np.ndarray
    n_a: np.ndarray
    n_b: np.ndarray
    logneg: np.ndarray
    norm_or_trace: np.ndarray
    parity: np.ndarray
    energy: np.ndarray
    hermiticity: np.ndarray
    min_eigenvalue: np.ndarray
    final_state: object = field(repr=False)
    engine: str = "closed"

    def __len__(self):
        return self.times.size

    CSV_HEADER = "t,n_a,n_b,logneg,trace,parity"

    def to_csv(self, path):
        """One row per sample; 12 significant digits."""
        cols = (self.times, self.n_a, self.n_b, self.logneg, self.norm_or_trace, self.parity)
        with open(path, "w", newline="\n") as fh:
            fh.write(self.CSV_HEADER + "\n")
            for row in zip(*cols):
                fh.write(",".join(f"{v:.12g}" for v in row) + "\n")

    def max_difference(self, other, names=("n_a", "n_b", "logneg", "norm_or_trace", "parity")):
        """Largest absolute difference per observable against a run on the same time grid."""
        if not np.allclose(self.times, other.times, rtol=0, atol=1e-9):
            raise ValueError("time grids differ")
        return {k: float(np.max(np.abs(getattr(self, k) - getattr(other, k)))) for k in names}


def rk4_step(y, rhs, dt):
    k1 = rhs(y)
    k2 = rhs(y + 0.5 * dt * k1)
    k3 = rhs(y + 0.5 * dt * k2)
    k4 = rhs(y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _integrate(y0, rhs, cfg, sample):
    """Step ``y`` with RK4 and call ``sample(t, y)`` at the recorded steps."""
    y = y0
    records = [sample(0.0, y)]
    for step in range(1, cfg.n_steps + 1):
        y = rk4_step(y, rhs, cfg.dt)
        if step % cfg.record_every == 0 or step == cfg.n_steps:
            records.append(sample(step * cfg.dt, y))
    return y, records


def _check_saturation(state, t):
    pop = top_shell_population(state)
    if pop > SATURATION_THRESHOLD:
        raise CutoffSaturationError(pop, SATURATION_THRESHOLD, t)


# ---------------------------------------------------------------- closed system


def amplitude_rhs(p, cutoff, rwa=False):
    """
    Right-hand side of the amplitude equations on the ``(n_a, n_b)`` grid::

        dA[m,n]/dt = -i (w_a m + w_b n) A[m,n]
                     - i g [ sqrt((m+1)(n+1)) A[m+1,n+1] + sqrt(m n) A[m-1,n-1]
                           + sqrt(m(n+1)) A[m-1,n+1] + sqrt((m+1)n) A[m+1,n-1] ]

    With ``rwa=True`` the first two (pair creation/annihilation) couplings are
    dropped. Returns a function of the flat amplitude vector.
    """
    n_a, n_b = cutoff.shape
    m = np.arange(n_a)[:, None]
    n = np.arange(n_b)[None, :]
    diag = -1j * (p.omega_a * m + p.omega_b * n + (p.constant if p.include_constant else 0.0))
    diag = np.broadcast_to(diag, cutoff.shape)
    ig = -1j * p.g
    c_pp = ig * np.sqrt((m[:-1] + 1) * (n[:, :-1] + 1))  # A[m+1, n+1] into (m, n)
    c_mm = ig * np.sqrt(m[1:] * n[:, 1:])  # A[m-1, n-1]
    c_mp = ig * np.sqrt(m[1:] * (n[:, :-1] + 1))  # A[m-1, n+1]
    c_pm = ig * np.sqrt((m[:-1] + 1) * n[:, 1:])  # A[m+1, n-1]

    def rhs(y):
        A = y.reshape(n_a, n_b)
        out = diag * A
        if not rwa:
            out[:-1, :-1] += c_pp * A[1:, 1:]
            out[1:, 1:] += c_mm * A[:-1, :-1]
        out[1:, :-1] += c_mp * A[:-1, 1:]
        out[:-1, 1:] += c_pm * A[1:, :-1]
        return out.reshape(-1)

    return rhs


def _number_weights(cutoff):
    m, n = cutoff.grids()
    return m.astype(float), n.astype(float), np.where((m + n) % 2 == 0, 1.0, -1.0)


def evolve_closed(p, psi0, cfg, rwa=False, check_saturation=True):
    """
    Integrate the amplitude equations from ``psi0``.

    Parameters
    ----------
    p : ModelParams
    psi0 : StateVector
        Normalized initial state; ``vacuum(cutoff)`` reproduces
        ``A[m, n](0) = delta_m0 delta_n0``.
    cfg : EvolutionConfig
    rwa : bool
        Drop the counter-rotating terms.
    check_saturation : bool
        Raise :class:`CutoffSaturationError` when more than 1e-6 of the
        probability reaches the top two Fock levels of either mode.

    Returns
    -------
    TimeSeries
    """
    if not isinstance(psi0, StateVector):
        raise TypeError("psi0: expected StateVector")
    if abs(psi0.norm() - 1) > 1e-9:
        raise ValueError(f"psi0: norm {psi0.norm():.12g} differs from 1")
    cfg.check_resolution(p)
    cutoff = psi0.cutoff
    rhs = amplitude_rhs(p, cutoff, rwa=rwa)
    H = (build_rwa_hamiltonian if rwa else build_hamiltonian)(p, cutoff)
    wm, wn, wp = _number_weights(cutoff)

    def sample(t, y):
        state = StateVector(cutoff, y)
        if check_saturation:
            _check_saturation(state, t)
        prob = np.abs(y) ** 2
        return (
            t,
            prob @ wm,
            prob @ wn,
            log_negativity(state),
            math.sqrt(prob.sum()),
            prob @ wp,
            np.vdot(y, H @ y).real,
            np.nan,
            np.nan,
        )

    y, records = _integrate(np.array(psi0.amps, dtype=complex), rhs, cfg, sample)
    return _series(records, StateVector(cutoff, y), "closed")


def _series(records, final, engine):
    cols = [np.array(c, dtype=float) for c in zip(*records)]
    return TimeSeries(*cols, final_state=final, engine=engine)


# ------------------------------------------------------------ master equations


def _superop_D(o, rho):
    od = o.conj().T
    return o @ rho @ od - 0.5 * ((od @ o) @ rho + rho @ (od @ o))


def _superop_S(o, o2, rho):
    """``S[o, o'] rho = o rho o' - (o' o rho + rho o' o) / 2``."""
    prod = o2 @ o
    return o @ rho @ o2 - 0.5 * (prod @ rho + rho @ prod)


def beta_dissipator(p, rho):
    """
    Dissipative part of the microscopic master equation, term by term.

    Parameters
    ----------
    p : ModelParams
    rho : DensityMatrix

    Returns
    -------
    ndarray
        ``d x d`` matrix: four bare-mode Lindblad terms and ten cross terms
        ``S[o, o']`` weighted by the ``beta`` coefficients.
    """
    rho = as_density(rho)
    nm = normal_mode_analysis(p)
    a, ad, b, bd = (op.toarray() for op in ladder_ops(rho.cutoff))
    r = rho.matrix
    b1, b2, b3, b4, b5, b6, b7, b8, b9, b10 = nm.beta
    S = _superop_S
    return (
        b1 * _superop_D(a, r)
        # beta_2 = a1 F2^2 + a2 F6^2 multiplies the a^dag channel, beta_3 the b channel
        + b2 * _superop_D(ad, r)
        + b3 * _superop_D(b, r)
        + b4 * _superop_D(bd, r)
        + b5 * (S(a, a, r) + S(ad, ad, r))
        + b6 * (S(b, b, r) + S(bd, bd, r))
        + b7 * (S(a, bd, r) + S(b, ad, r))
        + b8 * (S(a, b, r) + S(bd, ad, r))
        + b9 * (S(ad, bd, r) + S(b, a, r))
        + b10 * (S(ad, b, r) + S(bd, a, r))
    )


def _conjugated_jumps(p, cutoff, rates, pad):
    big = cutoff.grown(pad)
    U = build_U(p, big)
    Sa, Sb = build_squeezers(p, big)
    a, _, b, _ = (op.toarray() for op in ladder_ops(big))
    A = Sa @ a @ Sa.conj().T
    B = Sb @ b @ Sb.conj().T
    m, n = big.grids()
    keep = np.flatnonzero((m < cutoff.n_a) & (n < cutoff.n_b))
    return [rate * (U.conj().T @ X @ U)[np.ix_(keep, keep)] for rate, X in zip(rates, (A, B))]


def micro_jump_operators(p, cutoff, route="factored", pad=None):
    """
    Bare-frame jump operators ``sqrt(alpha_1) L_A`` and ``sqrt(alpha_2) L_B``.

    ``route="factored"`` combines truncated ladder operators with the
    ``F`` coefficients. ``route="conjugation"`` forms ``U^dag (S_a a S_a^dag) U``
    from matrices on a grid enlarged by ``pad`` levels per mode and crops it
    back. With ``pad=None`` the padding grows in steps of ``PAD_STEP`` until
    the cropped operators change by less than ``PAD_TOL``; the two routes
    then agree to that level.
    """
    nm = normal_mode_analysis(p)
    rates = np.sqrt([nm.alpha_1, nm.alpha_2])
    if route == "factored":
        ops = ladder_ops(cutoff)
        out = []
        for rate, coeffs in zip(rates, nm.jump_coefficients()):
            L = sum(c * o for c, o in zip(coeffs, ops))
            out.append((rate * L).tocsr())
        return out
    if route == "conjugation":
        if pad is not None:
            return [sp.csr_matrix(L) for L in _conjugated_jumps(p, cutoff, rates, pad)]
        prev = _conjugated_jumps(p, cutoff, rates, PAD_STEP)
        for pad in range(2 * PAD_STEP, MAX_PAD + 1, PAD_STEP):
            cur = _conjugated_jumps(p, cutoff, rates, pad)
            if max(np.max(np.abs(x - y)) for x, y in zip(cur, prev)) < PAD_TOL:
                return [sp.csr_matrix(L) for L in cur]
            prev = cur
        raise ValueError(f"pad: conjugated jump operators still changing at pad = {MAX_PAD}")
    raise ValueError(f"route: must be one of {MICRO_ROUTES}, got {route!r}")


def phenom_jump_operators(p, cutoff):
    a, _, b, _ = ladder_ops(cutoff)
    return [math.sqrt(p.gamma_a) * a, math.sqrt(p.gamma_b) * b]


def _effective_hamiltonian(H, jumps):
    jumps = [sp.csr_matrix(L) for L in jumps if sp.csr_matrix(L).nnz]
    H_eff = sp.csr_matrix(H, dtype=complex)
    for L in jumps:
        H_eff = H_eff - 0.5j * (L.conj().T @ L)
    return H_eff.tocsr(), jumps


def lindblad_rhs(H, jumps):
    """
    ``drho/dt = -i[H, rho] + sum_k D[L_k] rho`` for Hermitian ``rho``.

    Uses ``H_eff = H - (i/2) sum L^dag L`` so each call costs one product
    with ``H_eff`` and two per jump operator. Both shortcuts assume a
    Hermitian argument, so the input is first replaced by its Hermitian part;
    without this, rounding noise in the anti-Hermitian part is propagated by
    a map that is not trace preserving and grows over long runs. The result is
    Hermitian by construction.
    """
    H_eff, jumps = _effective_hamiltonian(H, jumps)

    def rhs(rho):
        rho = 0.5 * (rho + rho.conj().T)
        X = -1j * (H_eff @ rho)
        out = X + X.conj().T
        for L in jumps:
            out += L @ (L @ rho).conj().T
        return out

    return rhs


class ParityBlocks:
    """
    Packing of a parity-diagonal ``rho`` into its even and odd blocks.

    The Hamiltonian is parity even and every jump operator used here is
    parity odd, so a state with no even-odd coherences keeps none. Evolving
    the two blocks separately does about half the work of the full matrix.
    """

    def __init__(self, cutoff):
        m, n = cutoff.grids()
        self.dim = cutoff.dim
        self.even = np.flatnonzero((m + n) % 2 == 0)
        self.odd = np.flatnonzero((m + n) % 2 == 1)
        self.n_even = self.even.size

    def holds(self, rho):
        """True when ``rho`` has no even-odd coherences."""
        return not np.any(np.asarray(rho)[np.ix_(self.even, self.odd)])

    def pack(self, rho):
        rho = np.asarray(rho, dtype=complex)
        e, o = self.even, self.odd
        return np.concatenate([rho[np.ix_(e, e)].ravel(), rho[np.ix_(o, o)].ravel()])

    def split(self, y):
        k = self.n_even**2
        return y[:k].reshape(self.n_even, self.n_even), y[k:].reshape(self.odd.size, self.odd.size)

    def unpack(self, y):
        re, ro = self.split(y)
        out = np.zeros((self.dim, self.dim), dtype=complex)
        out[np.ix_(self.even, self.even)] = re
        out[np.ix_(self.odd, self.odd)] = ro
        return out

    def rhs(self, H, jumps):
        """
        Block form of :func:`lindblad_rhs`, or ``None`` when ``H`` mixes
        parities or some jump operator is not parity odd.
        """
        H_eff, jumps = _effective_hamiltonian(H, jumps)
        e, o = self.even, self.odd

        def part(M, rows, cols):
            return M[rows][:, cols].tocsr()

        if part(H_eff, e, o).nnz or part(H_eff, o, e).nnz:
            return None
        if any(part(L, e, e).nnz or part(L, o, o).nnz for L in jumps):
            return None
        H_e, H_o = part(H_eff, e, e), part(H_eff, o, o)
        # L maps the even block into the odd one and vice versa
        to_odd = [part(L, o, e) for L in jumps]
        to_even = [part(L, e, o) for L in jumps]

        def rhs(y):
            re, ro = self.split(y)
            re = 0.5 * (re + re.conj().T)
            ro = 0.5 * (ro + ro.conj().T)
            Xe = -1j * (H_e @ re)
            Xo = -1j * (H_o @ ro)
            out_e = Xe + Xe.conj().T
            out_o = Xo + Xo.conj().T
            for L_oe, L_eo in zip(to_odd, to_even):
                out_o += L_oe @ (L_oe @ re).conj().T
                out_e += L_eo @ (L_eo @ ro).conj().T
            return np.concatenate([out_e.ravel(), out_o.ravel()])

        return rhs


def micro_generator(p, cutoff, route="factored"):
    """Hamiltonian and jump operators of the microscopic master equation."""
    return build_hamiltonian(p, cutoff), micro_jump_operators(p, cutoff, route=route)


def phenom_generator(p, cutoff):
    return build_hamiltonian(p, cutoff), phenom_jump_operators(p, cutoff)


def micro_rhs(p, cutoff, route="factored"):
    """Generator of the microscopic master equation as ``rho -> drho/dt``."""
    if route == "beta":
        Hd = build_hamiltonian(p, cutoff).toarray()

        def rhs(rho):
            rho = 0.5 * (rho + rho.conj().T)
            X = -1j * (Hd @ rho)
            return X + X.conj().T + beta_dissipator(p, DensityMatrix(cutoff, rho))

        return rhs
    return lindblad_rhs(*micro_generator(p, cutoff, route))


def phenom_rhs(p, cutoff):
    return lindblad_rhs(*phenom_generator(p, cutoff))


def _evolve_master(p, rho0, cfg, generator, engine, check_saturation):
    """
    ``generator`` is either ``(H, jumps)`` or a ready ``rho -> drho/dt``
    function. The parity-block path is taken when the generator and the
    initial state allow it; the recorded samples do not depend on the path.
    """
    rho0 = as_density(rho0)
    rho0.check_physical()
    cfg.check_resolution(p)
    cutoff = rho0.cutoff
    H = build_hamiltonian(p, cutoff)
    wm, wn, wp = _number_weights(cutoff)
    Hd = H.toarray()

    y0 = np.array(rho0.matrix, dtype=complex)
    rhs, unpack = generator, None
    if not callable(generator):
        blocks = ParityBlocks(cutoff)
        block_rhs = blocks.rhs(*generator) if blocks.holds(y0) else None
        if block_rhs is None:
            rhs = lindblad_rhs(*generator)
        else:
            rhs, unpack, y0 = block_rhs, blocks.unpack, blocks.pack(y0)

    def sample(t, y):
        r = y if unpack is None else unpack(y)
        state = DensityMatrix(cutoff, r)
        if check_saturation:
            _check_saturation(state, t)
        pops = np.real(np.diag(r))
        herm = 0.5 * (r + r.conj().T)
        return (
            t,
            pops @ wm,
            pops @ wn,
            log_negativity(DensityMatrix(cutoff, herm)),
            np.trace(r).real,
            pops @ wp,
            np.einsum("ij,ji->", Hd, r).real,
            float(np.max(np.abs(r - r.conj().T))),
            float(np.linalg.eigvalsh(herm)[0]),
        )

    y, records = _integrate(y0, rhs, cfg, sample)
    final = y if unpack is None else unpack(y)
    return _series(records, DensityMatrix(cutoff, final), engine)


def evolve_master_micro(p, rho0, cfg, route="factored", check_saturation=True):
    """
    Integrate the microscopic master equation in the bare-mode basis.

    ``rho0`` may be a :class:`DensityMatrix` or a :class:`StateVector`.
    ``route`` selects how the dissipator is assembled (see
    :func:`micro_jump_operators`; ``"beta"`` evaluates the fourteen terms
    one by one and is meant for cross-checks).
    """
    cutoff = as_density(rho0).cutoff
    generator = micro_rhs(p, cutoff, route) if route == "beta" else micro_generator(p, cutoff, route)
    return _evolve_master(p, rho0, cfg, generator, "micro", check_saturation)


def evolve_master_phenom(p, rho0, cfg, check_saturation=True):
    """Integrate the master equation with bare-mode damping ``gamma D[a] + gamma D[b]``."""
    cutoff = as_density(rho0).cutoff
    return _evolve_master(p, rho0, cfg, phenom_generator(p, cutoff), "phenom", check_saturation)


def evolve(p, state0, cfg, **kwargs):
    """Dispatch on ``cfg.engine``."""
    if cfg.engine == "closed":
        return evolve_closed(p, state0, cfg, **kwargs)
    if cfg.engine == "micro":
        return evolve_master_micro(p, state0, cfg, **kwargs)
    return evolve_master_phenom(p, state0, cfg, **kwargs)


def dt_halving_drift(p, state0, cfg, **kwargs):
    """Largest change of any recorded observable when ``dt`` is halved."""
    coarse = evolve(p, state0, cfg, **kwargs)
    fine = evolve(p, state0, cfg.halved(), **kwargs)
    return max(coarse.max_difference(fine).values())


# ----------------------------------------------------------------- steady state


def liouvillian(H, jumps):
    """
    Sparse ``d^2 x d^2`` generator acting on row-major ``vec(rho)``.

    Used only by :func:`steady_state`; time stepping applies the generator
    without forming this matrix.
    """
    d = H.shape[0]
    eye = sp.identity(d, format="csr")
    H_eff = sp.csr_matrix(H, dtype=complex)
    jumps = [sp.csr_matrix(L) for L in jumps]
    for L in jumps:
        H_eff = H_eff - 0.5j * (L.conj().T @ L)
    out = -1j * sp.kron(H_eff, eye) + 1j * sp.kron(eye, H_eff.conj())
    for L in jumps:
        out = out + sp.kron(L, L.conj())
    return out.tocsc()


def steady_state(p, cutoff, engine="micro"):
    """
    Null vector of the Liouvillian with unit trace, by sparse LU.

    Requires at least one positive decay rate. The solve runs on
    parity-diagonal matrices, which is where the state relaxing from the
    vacuum (or any Fock state) lives.
    """
    if engine == "micro":
        jumps = micro_jump_operators(p, cutoff)
    elif engine == "phenom":
        jumps = phenom_jump_operators(p, cutoff)
    else:
        raise ValueError(f"engine: steady state needs 'micro' or 'phenom', got {engine!r}")
    if p.gamma_a <= 0 and p.gamma_b <= 0:
        raise ValueError("gamma_a, gamma_b: at least one must be > 0 for a steady state")
    d = cutoff.dim
    Lv = liouvillian(build_hamiltonian(p, cutoff), jumps)
    # the Liouvillian keeps parity-diagonal matrices parity diagonal and the
    # steady state reached from the vacuum is one, so solve on that subspace
    m, n = cutoff.grids()
    par = (m + n) % 2
    keep = np.flatnonzero((par[:, None] == par[None, :]).ravel())
    Lk = Lv[keep][:, keep].tolil()
    diag_pos = np.searchsorted(keep, np.arange(d) * (d + 1))
    trace_row = np.zeros(keep.size, dtype=complex)
    trace_row[diag_pos] = 1.0
    Lk[0, :] = trace_row
    rhs = np.zeros(keep.size, dtype=complex)
    rhs[0] = 1.0
    x = np.zeros(d * d, dtype=complex)
    x[keep] = spla.spsolve(Lk.tocsc(), rhs)
    rho = x.reshape(d, d)
    return DensityMatrix(cutoff, 0.5 * (rho + rho.conj().T))
