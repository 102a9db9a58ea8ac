"""
Parameters, Hamiltonians and the analytic normal-mode data of two
position-coupled oscillators.

Units: hbar = 1, mass = 1 in the bosonic frame, frequencies and rates in
units of a reference frequency, time in its inverse.

The bare Hamiltonian is::

    H = w_a a^dag a + w_b b^dag b + g (a^dag + a)(b^dag + b) [+ (w_a + w_b)/2]

Normal modes
------------
A rotation by the mixing angle ``theta`` followed by single-mode squeezing
(``r_a``, ``r_b``) diagonalizes ``H``. ``theta`` is taken as
``0.5 * atan2(2 xi, w_a^2 - w_b^2)`` so that mode a of the rotated frame
always carries the stiffer frequency ``omega_A``. With ``xi > 0`` (the sign
produced by a spring coupling, i.e. ``g < 0``) the degenerate case gives
``theta = pi/4``; ``g > 0`` gives ``-pi/4``. Observables are even in ``g``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass, field, replace

import numpy as np
import scipy.sparse as sp

from .exceptions import InstabilityError
from .hilbert import FockCutoff, ladder_ops

DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class MechanicalParams:
    """Mass, bare frequencies and spring coupling ``eta (x1 - x2)^2``."""

    mu: float
    omega_1: float
    omega_2: float
    eta: float

    def __post_init__(self):
        for name in ("mu", "omega_1", "omega_2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name}: must be > 0, got {getattr(self, name)!r}")
        if not self.eta >= 0:
            raise ValueError(f"eta: must be >= 0, got {self.eta!r}")


@dataclass(frozen=True)
class ModelParams:
    """
    Bosonic-frame parameters.

    Parameters
    ----------
    omega_a, omega_b : float
        Bare mode frequencies (> 0).
    g : float
        Signed coupling; stability requires ``2|g| < sqrt(omega_a omega_b)``.
    gamma_a, gamma_b : float
        Zero-temperature bath decay rates (>= 0).
    include_constant : bool
        Add ``(omega_a + omega_b)/2`` to the Hamiltonian.
    allow_critical : bool
        Skip the stability check so truncated numerics can probe the
        critical point. Analytic routines still refuse such parameters.
    """

    omega_a: float
    omega_b: float
    g: float
    gamma_a: float = 0.0
    gamma_b: float = 0.0
    include_constant: bool = False
    allow_critical: bool = False

    def __post_init__(self):
        for name in ("omega_a", "omega_b"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name}: must be a finite number > 0, got {value!r}")
        for name in ("gamma_a", "gamma_b"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValueError(f"{name}: must be a finite number >= 0, got {value!r}")
        if not math.isfinite(self.g):
            raise ValueError(f"g: must be finite, got {self.g!r}")
        if not self.is_stable:
            if not self.allow_critical:
                raise InstabilityError(self.g, self.critical_coupling)
            warnings.warn(
                f"g = {self.g:.6g} is at or beyond the critical coupling "
                f"{self.critical_coupling:.6g}; the soft mode is unbound and "
                "truncated results will not converge in the cutoff",
                RuntimeWarning,
                stacklevel=3,
            )

    @property
    def critical_coupling(self):
        return 0.5 * math.sqrt(self.omega_a * self.omega_b)

    @property
    def is_stable(self):
        return 2 * abs(self.g) < math.sqrt(self.omega_a * self.omega_b)

    @property
    def is_degenerate(self):
        return abs(self.omega_a - self.omega_b) <= DEGENERACY_TOL * max(self.omega_a, self.omega_b)

    @property
    def constant(self):
        return 0.5 * (self.omega_a + self.omega_b)

    def with_g(self, g):
        return replace(self, g=g)

    def with_gamma(self, gamma_a, gamma_b=None):
        return replace(self, gamma_a=gamma_a, gamma_b=gamma_a if gamma_b is None else gamma_b)


def degenerate(g, omega=1.0, gamma=0.0, **kwargs):
    """Shorthand for ``omega_a = omega_b = omega`` and equal decay rates."""
    return ModelParams(omega, omega, g, gamma, gamma, **kwargs)


def from_mechanical(p):
    """
    Map mass/spring parameters onto the bosonic frame.

    ``omega_a = sqrt(omega_1^2 + 2 eta / mu)``, likewise ``omega_b``, and
    ``g = -xi / (2 mu sqrt(omega_a omega_b))`` with ``xi = 2 eta``. The result
    is always stable because ``xi^2 / mu^2 < omega_a^2 omega_b^2`` for any
    ``eta >= 0``.
    """
    omega_a = math.sqrt(p.omega_1**2 + 2 * p.eta / p.mu)
    omega_b = math.sqrt(p.omega_2**2 + 2 * p.eta / p.mu)
    xi = 2 * p.eta
    g = -xi / (2 * p.mu * math.sqrt(omega_a * omega_b))
    return ModelParams(omega_a, omega_b, g)


def _check_cutoff(cutoff):
    if not isinstance(cutoff, FockCutoff):
        raise TypeError(f"cutoff: expected FockCutoff, got {type(cutoff).__name__}")


def _free_part(p, cutoff):
    a, adag, b, bdag = ops = ladder_ops(cutoff)
    h = p.omega_a * (adag @ a) + p.omega_b * (bdag @ b)
    if p.include_constant:
        h = h + p.constant * sp.identity(cutoff.dim, format="csr")
    return h, ops


def build_hamiltonian(p, cutoff):
    """Full Hamiltonian with counter-rotating terms, as a sparse Hermitian matrix."""
    _check_cutoff(cutoff)
    h, (a, adag, b, bdag) = _free_part(p, cutoff)
    h = h + p.g * ((adag + a) @ (bdag + b))
    return h.tocsr()


def build_rwa_hamiltonian(p, cutoff):
    """Hamiltonian with only the excitation-conserving exchange ``g (a^dag b + a b^dag)``."""
    _check_cutoff(cutoff)
    h, (a, adag, b, bdag) = _free_part(p, cutoff)
    h = h + p.g * (adag @ b + a @ bdag)
    return h.tocsr()


@dataclass(frozen=True)
class NormalModeData:
    """
    Everything the normal-mode transformation yields in closed form.

    ``f`` and ``F`` hold the eight transform coefficients each (``f[0]`` is
    f_1). ``beta`` holds the ten cross-dissipator weights in the order of
    their defining formulas.
    """

    theta: float
    xi: float
    omega_A: float
    omega_B: float
    r_a: float
    r_b: float
    g_a: float
    g_b: float
    f: tuple = field(repr=False)
    F: tuple = field(repr=False)
    alpha_1: float = 0.0
    alpha_2: float = 0.0
    beta: tuple = field(default=(), repr=False)

    def jump_coefficients(self):
        """
        Coefficients of the bare-frame jump operators on ``(a, a^dag, b, b^dag)``.

        Row 0 is ``U^dag A U = F1 a + F2 a^dag - F3 b - F4 b^dag``,
        row 1 is ``U^dag B U = F5 a + F6 a^dag + F7 b + F8 b^dag``.
        """
        F1, F2, F3, F4, F5, F6, F7, F8 = self.F
        return np.array([[F1, F2, -F3, -F4], [F5, F6, F7, F8]])

    def as_dict(self):
        """Flat ``name -> float`` mapping (``f1`` .. ``f8``, ``beta1`` ..)."""
        out = {}
        for key, value in asdict(self).items():
            if isinstance(value, tuple):
                for i, v in enumerate(value, start=1):
                    out[f"{key}{i}"] = float(v)
            else:
                out[key] = float(value)
        return out


def mixing_angle(p):
    """Rotation angle putting the stiffer normal mode on mode a; see module notes."""
    # +0.0 turns a negative zero into +0.0 so atan2 stays on the principal branch
    xi = -2.0 * p.g * math.sqrt(p.omega_a * p.omega_b) + 0.0
    return 0.5 * math.atan2(2.0 * xi, p.omega_a**2 - p.omega_b**2 + 0.0)


def normal_mode_analysis(p):
    """
    Closed-form normal-mode data for stable parameters.

    Raises
    ------
    InstabilityError
        When ``omega_B^2 <= 0``; carries ``g_c = sqrt(omega_a omega_b)/2``.
    """
    wa, wb = p.omega_a, p.omega_b
    xi = -2.0 * p.g * math.sqrt(wa * wb) + 0.0
    mean_sq = 0.5 * (wa**2 + wb**2)
    half_split = 0.5 * math.hypot(wa**2 - wb**2, 2.0 * xi)
    wA2 = mean_sq + half_split
    # wA2 * wB2 = wa^2 wb^2 - xi^2; this form avoids cancellation near g_c
    # clamp keeps omega_B <= omega_A when rounding splits a degenerate pair
    wB2 = min((wa**2 * wb**2 - xi**2) / wA2, wA2)
    if not p.is_stable or wB2 <= 0:
        raise InstabilityError(p.g, p.critical_coupling)
    wA, wB = math.sqrt(wA2), math.sqrt(wB2)
    theta = mixing_angle(p)
    c, s = math.cos(theta), math.sin(theta)

    f = (
        0.5 * c / math.sqrt(wa * wA) * (wa + wA),
        0.5 * c / math.sqrt(wa * wA) * (wa - wA),
        0.5 * s / math.sqrt(wa * wB) * (wa + wB),
        0.5 * s / math.sqrt(wa * wB) * (wa - wB),
        0.5 * s / math.sqrt(wb * wA) * (wb + wA),
        0.5 * s / math.sqrt(wb * wA) * (wb - wA),
        0.5 * c / math.sqrt(wb * wB) * (wb + wB),
        0.5 * c / math.sqrt(wb * wB) * (wb - wB),
    )
    F = (
        0.5 * c / math.sqrt(wa * wA) * (wA + wa),
        0.5 * c / math.sqrt(wa * wA) * (wA - wa),
        0.5 * s / math.sqrt(wb * wA) * (wA + wb),
        0.5 * s / math.sqrt(wb * wA) * (wA - wb),
        0.5 * s / math.sqrt(wa * wB) * (wB + wa),
        0.5 * s / math.sqrt(wa * wB) * (wB - wa),
        0.5 * c / math.sqrt(wb * wB) * (wB + wb),
        0.5 * c / math.sqrt(wb * wB) * (wB - wb),
    )
    alpha_1 = (f[0] + f[1]) ** 2 * p.gamma_a + (f[4] + f[5]) ** 2 * p.gamma_b
    alpha_2 = (f[2] + f[3]) ** 2 * p.gamma_a + (f[6] + f[7]) ** 2 * p.gamma_b

    F1, F2, F3, F4, F5, F6, F7, F8 = F
    a1, a2 = alpha_1, alpha_2
    beta = (
        a1 * F1**2 + a2 * F5**2,
        a1 * F2**2 + a2 * F6**2,
        a1 * F3**2 + a2 * F7**2,
        a1 * F4**2 + a2 * F8**2,
        a1 * F1 * F2 + a2 * F5 * F6,
        a1 * F3 * F4 + a2 * F7 * F8,
        a2 * F5 * F7 - a1 * F1 * F3,
        a2 * F5 * F8 - a1 * F1 * F4,
        a2 * F6 * F7 - a1 * F2 * F3,
        a2 * F6 * F8 - a1 * F2 * F4,
    )
    return NormalModeData(
        theta=theta,
        xi=xi,
        omega_A=wA,
        omega_B=wB,
        r_a=0.5 * math.log(wA / wa),
        r_b=0.5 * math.log(wB / wb),
        g_a=0.25 * (wA2 / wa - wa),
        g_b=0.25 * (wB2 / wb - wb),
        f=f,
        F=F,
        alpha_1=alpha_1,
        alpha_2=alpha_2,
        beta=beta,
    )
