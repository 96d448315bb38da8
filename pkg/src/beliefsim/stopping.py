"""Stopping-time distributions on {1, 2, 3, ...}.

Each distribution supports the PMF, sampling, the mean, and the power
transforms E[w^tau] and var[w^tau] that the closed-form belief moments are
built from. E[w^tau] is the moment-generating function evaluated at ln(w).

Conventions fixed here:
  * Geometric counts trials up to and including the first success, so the
    support starts at 1 and the mean is 1/rho.
  * Poisson supports two handlings of the zero outcome: "truncate"
    (condition on tau >= 1 and renormalize) and "shift" (tau = 1 + Z).
  * Deterministic is a point mass, used as an exactly solvable degenerate case.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
from scipy.stats import poisson as _poisson

from .errors import DivergenceError

# Hard ceiling on the number of terms any series summation may use.
SUPPORT_CAP = 10**6

# Default cumulative-mass tail for internal PMF summations.
PMF_TAIL = 1e-12


class StoppingTime(ABC):
    """Discrete random number of observations, always >= 1."""

    @abstractmethod
    def pmf(self, n):
        """P(tau = n); vectorized over integer arrays, zero outside the support."""

    @abstractmethod
    def sample(self, rng: np.random.Generator, size=None):
        """Draw from the distribution; values are integers >= 1."""

    @abstractmethod
    def mean(self) -> float:
        """E[tau] in closed form."""

    @abstractmethod
    def expected_pow(self, w: float) -> float:
        """E[w^tau] for w > 0, in closed form.

        Raises DivergenceError when the underlying series does not converge.
        """

    @abstractmethod
    def truncation_point(self, tail_eps: float) -> int:
        """Smallest N with P(tau > N) < tail_eps.

        Raises DivergenceError if N would exceed SUPPORT_CAP.
        """

    def var_pow(self, w: float) -> float:
        """var[w^tau] = E[w^(2 tau)] - E[w^tau]^2; clamped at 0 against roundoff."""
        v = self.expected_pow(w * w) - self.expected_pow(w) ** 2
        return max(v, 0.0)

    def support(self, tail_eps: float = PMF_TAIL) -> np.ndarray:
        """Integers 1..N covering all but tail_eps of the probability mass."""
        return np.arange(1, self.truncation_point(tail_eps) + 1)

    def variance(self) -> float:
        """var[tau] by PMF summation over the 1 - 1e-12 support."""
        ns = self.support()
        p = self.pmf(ns)
        m = float(np.dot(p, ns))
        return max(float(np.dot(p, ns * ns)) - m * m, 0.0)

    def _check_cap(self, n: float) -> int:
        if n > SUPPORT_CAP:
            raise DivergenceError(
                f"{self!r}: series truncation needs {n:.3g} terms, cap is {SUPPORT_CAP}"
            )
        return int(n)


@dataclass(frozen=True)
class Geometric(StoppingTime):
    """Trials to first success: P(tau = n) = rho (1-rho)^(n-1), n >= 1."""

    rho: float

    def __post_init__(self):
        if not (0.0 < self.rho <= 1.0):
            raise ValueError(f"geometric rho must be in (0, 1], got {self.rho}")

    def pmf(self, n):
        n = np.asarray(n)
        p = np.where(n >= 1, self.rho * (1.0 - self.rho) ** (n - 1), 0.0)
        return p if p.ndim else float(p)

    def sample(self, rng, size=None):
        return rng.geometric(self.rho, size=size)

    def mean(self):
        return 1.0 / self.rho

    def expected_pow(self, w):
        if w <= 0:
            raise ValueError("w must be positive")
        q = (1.0 - self.rho) * w
        if q >= 1.0:
            raise DivergenceError(
                f"E[w^tau] diverges for Geometric(rho={self.rho}) at w={w}: "
                f"(1-rho)*w = {q} >= 1"
            )
        return self.rho * w / (1.0 - q)

    def truncation_point(self, tail_eps):
        if self.rho == 1.0:
            return 1
        # P(tau > N) = (1-rho)^N
        n = math.ceil(math.log(tail_eps) / math.log1p(-self.rho))
        return self._check_cap(max(n, 1))


@dataclass(frozen=True)
class Poisson(StoppingTime):
    """Poisson-based stopping time with the zero outcome handled explicitly.

    zero_handling = "truncate": tau ~ Poisson(gamma) conditioned on tau >= 1.
    zero_handling = "shift":    tau = 1 + Z with Z ~ Poisson(gamma).
    """

    gamma: float
    zero_handling: str = "truncate"

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise ValueError(f"poisson gamma must be finite and > 0, got {self.gamma}")
        if self.zero_handling not in ("truncate", "shift"):
            raise ValueError(f"zero_handling must be 'truncate' or 'shift', got {self.zero_handling!r}")

    @property
    def _renorm(self) -> float:
        return 1.0 - math.exp(-self.gamma)

    def pmf(self, n):
        n = np.asarray(n)
        if self.zero_handling == "truncate":
            p = np.where(n >= 1, _poisson.pmf(n, self.gamma) / self._renorm, 0.0)
        else:
            p = np.where(n >= 1, _poisson.pmf(n - 1, self.gamma), 0.0)
        return p if p.ndim else float(p)

    def sample(self, rng, size=None):
        if self.zero_handling == "shift":
            return 1 + rng.poisson(self.gamma, size=size)
        if size is None:
            z = rng.poisson(self.gamma)
            while z == 0:
                z = rng.poisson(self.gamma)
            return z
        z = rng.poisson(self.gamma, size=size)
        zero = z == 0
        while zero.any():
            z[zero] = rng.poisson(self.gamma, size=int(zero.sum()))
            zero = z == 0
        return z

    def mean(self):
        if self.zero_handling == "truncate":
            return self.gamma / self._renorm
        return 1.0 + self.gamma

    def expected_pow(self, w):
        if w <= 0:
            raise ValueError("w must be positive")
        # MGF of Poisson at ln(w) is exp(gamma (w - 1)); entire, never diverges.
        if self.zero_handling == "truncate":
            return (math.exp(self.gamma * (w - 1.0)) - math.exp(-self.gamma)) / self._renorm
        return w * math.exp(self.gamma * (w - 1.0))

    def truncation_point(self, tail_eps):
        if self.zero_handling == "truncate":
            n = _poisson.isf(tail_eps * self._renorm, self.gamma)
        else:
            n = 1 + _poisson.isf(tail_eps, self.gamma)
        return self._check_cap(max(int(n), 1))


@dataclass(frozen=True)
class Deterministic(StoppingTime):
    """Point mass at n; var[w^tau] is exactly zero."""

    n: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"deterministic stopping needs an integer n >= 1, got {self.n!r}")

    def pmf(self, n):
        n_arr = np.asarray(n)
        p = np.where(n_arr == self.n, 1.0, 0.0)
        return p if p.ndim else float(p)

    def sample(self, rng, size=None):
        if size is None:
            return self.n
        return np.full(size, self.n, dtype=np.int64)

    def mean(self):
        return float(self.n)

    def expected_pow(self, w):
        if w <= 0:
            raise ValueError("w must be positive")
        return float(w) ** self.n

    def var_pow(self, w):
        return 0.0

    def truncation_point(self, tail_eps):
        return self.n
