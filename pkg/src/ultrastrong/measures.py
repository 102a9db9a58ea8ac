"""
Entanglement and squeezing diagnostics.

Logarithmic negativity ``N = log2 ||rho^{T_b}||_1`` is evaluated from the
eigenvalues of the (Hermitian) partial transpose. Pure states are expanded
into a density matrix first; the Schmidt shortcut is deliberately not used.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exceptions import UnsupportedCaseError
from .hilbert import as_density, expectation, ladder_ops, parity_mask, partial_transpose_b
from .model import normal_mode_analysis
from .spectrum import ground_state_numeric

CLAMP_TOL = 1e-9
HERMITIAN_TOL = 1e-9


def trace_norm_partial_transpose(rho):
    """``||rho^{T_b}||_1`` as the sum of absolute eigenvalues."""
    rho = as_density(rho)
    err = rho.hermiticity_error()
    if err > HERMITIAN_TOL:
        raise ValueError(f"rho: not Hermitian (max |rho - rho^dag| = {err:.3e})")
    pt = partial_transpose_b(rho)
    pt = 0.5 * (pt + pt.conj().T)
    # rho commuting with parity => rho^{T_b} does too, since m+k = j+n <=> m+n = j+k (mod 2)
    even = parity_mask(rho.cutoff, +1)
    odd = ~even
    scale = np.max(np.abs(pt))
    if np.max(np.abs(pt[np.ix_(even, odd)]), initial=0.0) <= 1e-15 * scale:
        blocks = (pt[np.ix_(even, even)], pt[np.ix_(odd, odd)])
    else:
        blocks = (pt,)
    return float(sum(np.sum(np.abs(np.linalg.eigvalsh(blk))) for blk in blocks))


def log_negativity(rho, clamp=True):
    """
    Logarithmic negativity of a state.

    Parameters
    ----------
    rho : DensityMatrix or StateVector
    clamp : bool
        Report values in ``(-1e-9, 0)`` as exactly 0.

    Returns
    -------
    float
    """
    value = math.log2(trace_norm_partial_transpose(rho))
    if clamp and -CLAMP_TOL < value < 0:
        return 0.0
    return value


def ground_negativity_curve(p_base, g_grid, cutoff, max_workers=None):
    """
    Ground-state negativity for each coupling in ``g_grid``.

    Grid points are independent and evaluated on a thread pool (LAPACK
    releases the GIL).

    Returns
    -------
    list of (g, N)
    """
    g_grid = [float(g) for g in g_grid]
    params = [p_base.with_g(g) for g in g_grid]

    def point(p):
        return log_negativity(ground_state_numeric(p, cutoff))

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        values = list(pool.map(point, params))
    return list(zip(g_grid, values))


@dataclass(frozen=True)
class QuadratureSpec:
    """Rotated quadrature ``X(theta) = o^dag e^{i theta} + o e^{-i theta}`` of mode ``o``."""

    mode: str
    theta: float

    def __post_init__(self):
        if self.mode not in ("a", "b"):
            raise ValueError(f"mode: must be 'a' or 'b', got {self.mode!r}")
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    def operator(self, cutoff):
        a, adag, b, bdag = ladder_ops(cutoff)
        low, high = (a, adag) if self.mode == "a" else (b, bdag)
        phase = np.exp(1j * self.theta)
        return (phase * high + np.conj(phase) * low).tocsr()


def quadrature_variance_numeric(state, spec):
    """``<X^2> - <X>^2`` in a pure or mixed state. The vacuum gives 1."""
    X = spec.operator(state.cutoff)
    mean = expectation(X, state).real
    second = expectation(X @ X, state).real
    return second - mean**2


def quadrature_variance_analytic(p, theta):
    """
    Ground-state variance of ``X_a(theta)`` (identical for mode b) at degeneracy::

        1 + sinh^2 r_a + sinh^2 r_b - cos(2 theta) (sinh r_a cosh r_a + sinh r_b cosh r_b)
    """
    if not p.is_degenerate:
        raise UnsupportedCaseError(
            "quadrature_variance_analytic: closed form exists only for omega_a == omega_b"
        )
    nm = normal_mode_analysis(p)
    ra, rb = nm.r_a, nm.r_b
    cross = math.sinh(ra) * math.cosh(ra) + math.sinh(rb) * math.cosh(rb)
    return 1.0 + math.sinh(ra) ** 2 + math.sinh(rb) ** 2 - math.cos(2 * theta) * cross


def min_quadrature_variance(state, mode="a"):
    """
    Smallest rotated-quadrature variance and the angle reaching it.

    ``Var X(theta) = c0 + c1 cos 2theta + c2 sin 2theta`` exactly, so three
    angles fix the curve.

    Returns
    -------
    theta_min : float in [0, pi)
    var_min : float
    """
    v0, v45, v90 = (
        quadrature_variance_numeric(state, QuadratureSpec(mode, t))
        for t in (0.0, 0.25 * math.pi, 0.5 * math.pi)
    )
    c0 = 0.5 * (v0 + v90)
    c1 = 0.5 * (v0 - v90)
    c2 = v45 - c0
    theta_min = (0.5 * (math.atan2(c2, c1) + math.pi)) % math.pi
    return theta_min, c0 - math.hypot(c1, c2)


def uncertainty_product(state, spec):
    """``Var X(theta) * Var X(theta + pi/2)``; bounded below by 1."""
    conj = QuadratureSpec(spec.mode, spec.theta + 0.5 * math.pi)
    return quadrature_variance_numeric(state, spec) * quadrature_variance_numeric(state, conj)
