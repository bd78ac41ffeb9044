"""Exact samplers: subordinator increments, stable jumps, ball exit positions.

The isotropic stable increment is produced by Brownian subordination,

    X_{t+dt} - X_t  =  sqrt(A_dt) * Z,    Z ~ N(0, I_d),

where A_dt is an (alpha/2)-stable subordinator increment normalized so that
E exp(-lam A_t) = exp(-t (2 lam)^{alpha/2}); with the unit-diffusivity
Brownian convention E exp(i xi . B_s) = exp(-s |xi|^2 / 2) this reproduces
the target law E exp(i xi . X_t) = exp(-t |xi|^alpha) exactly.  Sampling d
independent 1-d stables instead would be wrong for alpha < 2; the shared
clock is what couples the coordinates.

The one-sided stable core uses the Chambers-Mallows-Stuck / Kanter
representation.  Parameterization trap: with theta ~ U(0, pi), W ~ Exp(1),

    S = sin(b th) sin((1-b) th)^{(1-b)/b} / (sin(th)^{1/b} W^{(1-b)/b})

has Laplace transform exp(-lam^b) with NO cosine prefactor (the often-quoted
cos(pi b / 2)^{1/b} factor belongs to a differently scaled family).  The
normalization is locked by the Laplace-transform and characteristic-function
tests in tests/test_sampling.py, and A_dt = 2 dt^{2/alpha} S.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SamplingError
from .kernels import StableParams
from .streams import RngStream

__all__ = [
    "IncrementSample",
    "sample_subordinator_increment",
    "sample_stable_increment",
    "sample_ball_exit_position",
    "sample_ball_exit_positions",
]


@dataclass(frozen=True)
class IncrementSample:
    dt: float
    jump: np.ndarray


def _one_sided_stable(gen: np.random.Generator, beta: float, size) -> np.ndarray:
    """S > 0 with E exp(-lam S) = exp(-lam^beta), 0 < beta < 1."""
    th = gen.uniform(0.0, np.pi, size)
    w = gen.standard_exponential(size)
    np.maximum(th, 1e-12, out=th)
    np.maximum(w, 1e-300, out=w)
    ratio = (1.0 - beta) / beta
    return (np.sin(beta * th) * np.sin((1.0 - beta) * th) ** ratio
            / (np.sin(th) ** (1.0 / beta) * w ** ratio))


def _subordinator_batch(gen: np.random.Generator, dt, alpha: float, size) -> np.ndarray:
    """A_dt with E exp(-lam A_t) = exp(-t (2 lam)^{alpha/2}); dt scalar or array."""
    if alpha == 2.0:
        # degenerate clock: Laplace exponent 2 lam
        return np.broadcast_to(np.asarray(2.0 * np.asarray(dt, dtype=float)), size).copy() \
            if size is not None else 2.0 * np.asarray(dt, dtype=float)
    s = _one_sided_stable(gen, 0.5 * alpha, size)
    return 2.0 * np.asarray(dt, dtype=float) ** (2.0 / alpha) * s


def _stable_jump_batch(gen: np.random.Generator, dt, d: int, alpha: float, n: int):
    """n isotropic stable increments over time dt; returns (clock, jumps)."""
    a = _subordinator_batch(gen, dt, alpha, n)
    z = gen.standard_normal((n, d))
    return a, np.sqrt(a)[:, None] * z


def sample_subordinator_increment(dt: float, alpha: float, stream: RngStream,
                                  size=None):
    """Draw the subordinated-clock increment A_dt (strictly positive)."""
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    if not (0.0 < alpha <= 2.0):
        raise ValueError("alpha must lie in (0, 2]")
    if alpha == 2.0:
        out = np.full(size, 2.0 * dt) if size is not None else 2.0 * dt
        return out
    gen = stream.generator()
    out = _subordinator_batch(gen, dt, alpha, size if size is not None else ())
    return float(out) if size is None else out


def sample_stable_increment(dt: float, params: StableParams, stream: RngStream,
                            size=None):
    """Draw increments of the isotropic stable process over time dt.

    Returns an IncrementSample for a single draw, or an (size, d) array.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    gen = stream.generator()
    n = 1 if size is None else int(size)
    _, jumps = _stable_jump_batch(gen, dt, params.d, params.alpha, n)
    if size is None:
        return IncrementSample(dt, jumps[0])
    return jumps


def sample_ball_exit_positions(x, center, r: float, params: StableParams,
                               stream: RngStream, n: int,
                               max_iter: int = 10_000) -> np.ndarray:
    """n exact draws of the exit position from B(center, r) started at x.

    Rejection sampling: the proposal is the exact exit law from the center
    (radius via r / sqrt(B) with B ~ Beta(alpha/2, 1 - alpha/2), direction
    uniform), whose boundary singularity matches the target's, and the
    acceptance ratio (rho (r - dx) / (r |x - y|))^d is bounded by one.
    """
    params.require_jump("ball exit sampling")
    x = np.asarray(x, dtype=float)
    center = np.asarray(center, dtype=float)
    d, alpha = params.d, params.alpha
    dx = float(np.linalg.norm(x - center))
    if dx >= r:
        raise ValueError("start point must lie strictly inside the ball")
    gen = stream.generator()
    out = np.empty((n, d))
    have = 0
    tries = 0
    while have < n:
        if tries >= max_iter * max(n, 1):
            raise SamplingError(
                "ball exit rejection sampler exceeded its iteration cap",
                tries=tries,
                diagnostics={"accepted": have, "requested": n, "depth_ratio": dx / r},
            )
        m = max(2 * (n - have), 64)
        tries += m
        b = gen.beta(0.5 * alpha, 1.0 - 0.5 * alpha, m)
        rho = r / np.sqrt(np.maximum(b, 1e-300))
        dirs = gen.standard_normal((m, d))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        y = center + rho[:, None] * dirs
        dist_xy = np.linalg.norm(y - x, axis=1)
        accept = gen.uniform(size=m) < (rho * (r - dx) / (r * dist_xy)) ** d
        take = min(int(accept.sum()), n - have)
        out[have:have + take] = y[accept][:take]
        have += take
    return out


def sample_ball_exit_position(x, center, r: float, params: StableParams,
                              stream: RngStream, max_iter: int = 10_000) -> np.ndarray:
    """Single exact draw from the ball exit-position law."""
    return sample_ball_exit_positions(x, center, r, params, stream, 1, max_iter)[0]
