"""Exception types shared across the package."""


class InstabilityError(ValueError):
    """Coupling at or beyond the point where the soft normal mode vanishes.

    Attributes
    ----------
    g : float
        Offending coupling.
    g_critical : float
        Critical coupling ``sqrt(omega_a * omega_b) / 2``.
    """

    def __init__(self, g, g_critical):
        self.g = g
        self.g_critical = g_critical
        super().__init__(
            f"g: |g| = {abs(g):.6g} must satisfy 2|g| < sqrt(omega_a*omega_b), "
            f"i.e. |g| < g_c = {g_critical:.6g}"
        )


class CutoffSaturationError(RuntimeError):
    """Population leaked into the top Fock shells; the cutoff must grow."""

    def __init__(self, population, threshold, time=None):
        self.population = population
        self.threshold = threshold
        self.time = time
        where = "" if time is None else f" at t = {time:.6g}"
        super().__init__(
            f"cutoff: population {population:.3e} in the top two Fock shells{where} "
            f"exceeds {threshold:.1e}; grow the cutoff"
        )


class UnsupportedCaseError(ValueError):
    """Closed form requested outside the regime where it exists."""
