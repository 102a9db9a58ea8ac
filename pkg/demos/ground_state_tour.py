#!/usr/bin/env python3
# Ground-state structure of two ultrastrongly coupled oscillators.
#
# Walks from the normal modes to the photon content, entanglement and
# squeezing of the ground state at resonance. Runs in a few seconds.
import math

import numpy as np

from ultrastrong import (
    FockCutoff,
    QuadratureSpec,
    degenerate,
    ground_excitations_analytic,
    ground_state_numeric,
    log_negativity,
    normal_mode_analysis,
    quadrature_variance_analytic,
    quadrature_variance_numeric,
)

cutoff = FockCutoff(30, 30)

# ----------------------------------------------------------------------------
# normal modes at g = 0.2

p = degenerate(0.2)
nm = normal_mode_analysis(p)
print(f"omega_A = {nm.omega_A:.6f}  (sqrt(1.4) = {math.sqrt(1.4):.6f})")
print(f"omega_B = {nm.omega_B:.6f}  (sqrt(0.6) = {math.sqrt(0.6):.6f})")
print(f"r_a = {nm.r_a:+.6f}, r_b = {nm.r_b:+.6f}")

# ----------------------------------------------------------------------------
# the ground state holds only even-parity pairs

psi = ground_state_numeric(p, cutoff)
amp = np.abs(psi.grid)
print("\n|C_mn| for m, n < 5")
for m in range(5):
    print("  " + " ".join(f"{amp[m, n]:.2e}" for n in range(5)))

# ----------------------------------------------------------------------------
# virtual photons and entanglement grow with the coupling

print("\n   g    <a^dag a>   analytic     N")
for g in (0.05, 0.1, 0.2, 0.3, 0.4):
    q = degenerate(g)
    G = ground_state_numeric(q, cutoff)
    n_a = np.vdot(G.grid, np.arange(30)[:, None] * G.grid).real
    print(f"{g:5.2f}  {n_a:.6f}   {ground_excitations_analytic(q):.6f}   {log_negativity(G):.4f}")

# ----------------------------------------------------------------------------
# quadrature squeezing: the variance dips below the vacuum value 1 at pi/2

for theta in (0.0, math.pi / 4, math.pi / 2):
    num = quadrature_variance_numeric(psi, QuadratureSpec("a", theta))
    print(f"Delta X_a^2({theta:.3f}) = {num:.6f}  analytic {quadrature_variance_analytic(p, theta):.6f}")
