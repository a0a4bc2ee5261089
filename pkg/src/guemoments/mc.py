"""Monte Carlo estimates of GUE multi-trace expectations.

Normalisation: density proportional to ``exp(-Tr X^2 / 2)``, i.e. diagonal
entries ``N(0, 1)`` and off-diagonal real and imaginary parts ``N(0, 1/2)``
each, so ``E|X_ij|^2 = 1`` and ``E Tr X^2 = N^2``.

Random streams: samples are drawn in chunks of ``chunk`` matrices; chunk ``c``
uses ``PCG64(SeedSequence(seed, spawn_key=(c,)))``.  The chunk size is part of
the stream definition, so serial and threaded runs with the same seed and
chunk size produce bit-identical estimates.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .moments import IndexMultiset, expectation

DEFAULT_CHUNK = 4096


def chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk_index,))))


def sample_gue_batch(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` independent ``n x n`` GUE matrices, shape ``(size, n, n)``."""
    if n < 1:
        raise ValueError("N must be at least 1")
    a = rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))
    # (A + A^H)/2 has off-diagonal Re, Im ~ N(0, 1/2) and diagonal ~ N(0, 1)
    return (a + np.conj(np.swapaxes(a, -1, -2))) / 2


def sample_gue(n: int, rng: np.random.Generator) -> np.ndarray:
    return sample_gue_batch(n, 1, rng)[0]


def is_hermitian(x: np.ndarray, atol: float = 0.0) -> bool:
    return bool(np.allclose(x, np.conj(np.swapaxes(x, -1, -2)), atol=atol, rtol=0))


def trace_products(mats: np.ndarray, ks: Iterable[int]) -> np.ndarray:
    """``prod_r Tr(X^k_r)`` for each matrix in the batch, powers by repeated multiplication."""
    ks = list(ks)
    size, n, _ = mats.shape
    out = np.ones(size)
    if not ks:
        return out
    traces = {0: np.full(size, float(n))}
    power = None
    for k in range(1, max(ks) + 1):
        power = mats if power is None else power @ mats
        if k in ks:
            traces[k] = np.trace(power, axis1=1, axis2=2).real
    for k in ks:
        out = out * traces[k]
    return out


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int


def _chunk_values(ks: tuple[int, ...], n: int, seed: int, index: int, size: int) -> np.ndarray:
    return trace_products(sample_gue_batch(n, size, chunk_rng(seed, index)), ks)


def estimate_multi_trace(
    ks: Iterable[int] | IndexMultiset,
    n: int,
    samples: int,
    seed: int,
    chunk: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> McEstimate:
    if samples < 2:
        raise ValueError("need at least two samples")
    ks = IndexMultiset.of(ks).ks
    sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]
    jobs = [(ks, n, seed, i, s) for i, s in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _chunk_values(*job), jobs))
    else:
        parts = [_chunk_values(*job) for job in jobs]
    values = np.concatenate(parts)
    return McEstimate(
        mean=float(values.mean()),
        std_error=float(values.std(ddof=1) / np.sqrt(samples)),
        samples=samples,
        seed=seed,
    )


@dataclass(frozen=True)
class MomentReport:
    ks: tuple[int, ...]
    n: int
    exact: int
    estimate: McEstimate
    sigma_bound: float
    passed: bool

    @property
    def z_score(self) -> float:
        if self.estimate.std_error == 0:
            return 0.0 if self.estimate.mean == self.exact else float("inf")
        return (self.estimate.mean - self.exact) / self.estimate.std_error


def cross_check(
    ks: Iterable[int] | IndexMultiset,
    n: int,
    samples: int,
    seed: int,
    sigma_bound: float = 4.0,
    **kwargs,
) -> MomentReport:
    """Compare the exact moment at ``n`` with a Monte Carlo estimate."""
    if sigma_bound <= 0:
        raise ValueError("sigma_bound must be positive")
    ks = IndexMultiset.of(ks)
    exact = expectation(ks, n)
    est = estimate_multi_trace(ks, n, samples, seed, **kwargs)
    passed = abs(est.mean - exact) <= sigma_bound * est.std_error
    return MomentReport(ks.ks, n, exact, est, sigma_bound, bool(passed))
