#!/usr/bin/env python3
# Relaxation from the bare vacuum under two master equations.
#
# The microscopic equation damps the normal modes and relaxes to the dressed
# ground state, keeping its virtual photons and entanglement. The
# phenomenological one damps the bare modes and loses part of both. A
# shortened run (cutoff 10, gamma = 0.05) takes about 20 s; the
# CLI's open-dynamics experiment runs the full case.
import numpy as np

from ultrastrong import (
    EvolutionConfig,
    FockCutoff,
    degenerate,
    evolve,
    ground_state_numeric,
    log_negativity,
    steady_state,
    vacuum,
)

cutoff = FockCutoff(10, 10)
p = degenerate(0.2, gamma=0.05)
rho0 = vacuum(cutoff).to_density()

runs = {}
for engine in ("micro", "phenom"):
    runs[engine] = evolve(p, rho0, EvolutionConfig(100.0, 0.01, 1000, engine))

print("    t    n_a micro  n_a phenom   N micro  N phenom")
for k, t in enumerate(runs["micro"].times):
    m, ph = runs["micro"], runs["phenom"]
    print(f"{t:5.0f}   {m.n_a[k]:.6f}   {ph.n_a[k]:.6f}   {m.logneg[k]:.4f}   {ph.logneg[k]:.4f}")

# ----------------------------------------------------------------------------
# late times: compare with the ground state and with the exact steady states

G = ground_state_numeric(p, cutoff)
rho = runs["micro"].final_state.matrix
print(f"\nfidelity of the micro state with |G> at t = 100: {np.vdot(G.amps, rho @ G.amps).real:.6f}")
print(f"ground-state N: {log_negativity(G):.4f}")
for engine in ("micro", "phenom"):
    print(f"steady-state N ({engine}): {log_negativity(steady_state(p, cutoff, engine)):.4f}")
