"""Seeded random matrix families with platform-stable substreams.

All randomness flows through the Philox counter-based generator keyed by a
``SeedSequence`` spawn path, so any (seed, path) pair addresses an
independent stream and per-trial generation is order independent.
Gaussian entries are produced by an explicit Box-Muller transform of the
uniform stream, keeping the bit stream fully specified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Generators refuse target angles this close to the half-plane boundary.
ALPHA_GUARD = math.pi / 2 - 0.01
# Complex Gaussian factors are resampled below this smallest singular value.
MIN_FACTOR_SIGMA = 1e-3


@dataclass(frozen=True)
class TrialConfig:
    """Configuration of one reproducible randomized suite."""

    seed: int
    n: int
    alpha: float = 0.0
    trials: int = 1
    partition: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0.0 <= self.alpha < ALPHA_GUARD:
            raise ValueError(f"alpha must lie in [0, {ALPHA_GUARD:.6f})")
        if self.partition is not None and not 1 <= self.partition <= self.n - 1:
            raise ValueError("partition must satisfy 1 <= p <= n - 1")


def rng_stream(seed: int, *path: int) -> np.random.Generator:
    """Philox generator for substream ``path`` of ``seed``."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))


def child_seed(seed: int, *path: int) -> int:
    """Derive a fresh 64-bit seed addressing substream ``path`` of ``seed``."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0])


def complex_gaussian(n: int, rng: np.random.Generator) -> np.ndarray:
    """n-by-n matrix of independent entries with N(0,1) real and imaginary parts."""
    u1 = rng.random((n, n))
    u2 = rng.random((n, n))
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    phase = 2.0 * np.pi * u2
    return radius * np.cos(phase) + 1j * (radius * np.sin(phase))


def gen_positive_definite(n: int, seed: int) -> np.ndarray:
    """Random Hermitian positive definite matrix G G* + 0.1 I."""
    g = complex_gaussian(n, rng_stream(seed))
    h = g @ g.conj().T + 0.1 * np.eye(n)
    return (h + h.conj().T) / 2.0


def gen_sectorial_planted(n: int, alpha: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Random sectorial sample together with its planted angle vector.

    Builds X diag(exp(i theta_j)) X* from a complex Gaussian X (resampled
    while its smallest singular value is below ``MIN_FACTOR_SIGMA``) and
    angles drawn uniformly from [-alpha, alpha] with theta_1 pinned to
    alpha so the nominal angle is attained.  Returns the matrix and the
    planted angles sorted descending.
    """
    if not 0.0 <= alpha < ALPHA_GUARD:
        raise ValueError(f"alpha must lie in [0, {ALPHA_GUARD:.6f})")
    rng = rng_stream(seed)
    x = complex_gaussian(n, rng)
    while float(np.linalg.svd(x, compute_uv=False)[-1]) < MIN_FACTOR_SIGMA:
        x = complex_gaussian(n, rng)
    thetas = rng.uniform(-alpha, alpha, size=n)
    thetas[0] = alpha
    a = (x * np.exp(1j * thetas)) @ x.conj().T
    return a, np.sort(thetas)[::-1]


def gen_sectorial(n: int, alpha: float, seed: int) -> np.ndarray:
    """Random matrix whose numerical range attains sector half-angle alpha."""
    return gen_sectorial_planted(n, alpha, seed)[0]


def gen_accretive_dissipative(n: int, seed: int) -> np.ndarray:
    """Random H + iK with H, K independent positive definite draws."""
    h = gen_positive_definite(n, child_seed(seed, 0))
    k = gen_positive_definite(n, child_seed(seed, 1))
    return h + 1j * k
