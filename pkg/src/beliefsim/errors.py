"""Exception types shared across the package."""


class ConfigError(ValueError):
    """An experiment configuration is malformed or inconsistent."""


class DivergenceError(ArithmeticError):
    """A closed-form series or MGF evaluation does not converge.

    Raised by the geometric stopping time when (1 - rho) * w >= 1, and by
    series truncation when the support cap is exceeded. Simulation paths
    never raise this; only closed-form analytics do.
    """


class DegenerateModelError(ValueError):
    """An operation requires strictly positive belief variance (e.g. s != 0)."""
