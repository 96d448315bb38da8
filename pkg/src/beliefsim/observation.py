"""Hypothesis-conditional observation model and per-observation log-likelihood ratios.

The binary test is between a null and an alternative density over scalar
observations. Only the Gaussian mean-shift pair is implemented: N(0, sigma_sq)
under the null and N(s, sigma_sq) under the alternative. The class contract
(sample / llr / llr_moments / conditional belief statistics downstream) is the
extension point for other pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

H0 = 0
H1 = 1


def check_hypothesis(h: int) -> int:
    if h not in (0, 1):
        raise ValueError(f"hypothesis must be 0 or 1, got {h!r}")
    return int(h)


@dataclass(frozen=True)
class LlrMoments:
    """Mean and variance (in nats) of a single-observation LLR under one hypothesis."""

    mean: float
    variance: float

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("LLR variance must be non-negative")


@dataclass(frozen=True)
class GaussianShiftModel:
    """Mean-shift Gaussian pair: f1 = N(s, sigma_sq), f0 = N(0, sigma_sq).

    s = 0 is permitted and yields the degenerate zero-LLR model.
    """

    s: float
    sigma_sq: float

    def __post_init__(self):
        if not math.isfinite(self.s):
            raise ValueError("shift s must be finite")
        if not (math.isfinite(self.sigma_sq) and self.sigma_sq > 0):
            raise ValueError("sigma_sq must be finite and > 0")

    def sample(self, h: int, rng: np.random.Generator, size=None):
        """Draw observation(s) from the hypothesis-h density."""
        loc = self.s if check_hypothesis(h) == H1 else 0.0
        return rng.normal(loc, math.sqrt(self.sigma_sq), size=size)

    def llr(self, x):
        """ln(f1(x) / f0(x)) in closed form: (s*x - s^2/2) / sigma_sq.

        Closed form only; never evaluates the two densities, so extreme x
        cannot underflow.
        """
        out = (self.s * np.asarray(x, dtype=float) - 0.5 * self.s * self.s) / self.sigma_sq
        return out if isinstance(x, np.ndarray) else float(out)

    def llr_moments(self, h: int) -> LlrMoments:
        """Exact single-observation LLR moments under hypothesis h.

        mean is +s^2/(2 sigma_sq) under the alternative and its negative under
        the null; the variance s^2/sigma_sq is common to both.
        """
        sign = 1.0 if check_hypothesis(h) == H1 else -1.0
        return LlrMoments(
            mean=sign * self.s * self.s / (2.0 * self.sigma_sq),
            variance=self.s * self.s / self.sigma_sq,
        )
