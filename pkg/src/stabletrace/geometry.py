"""Domains with exact geometry: boundary distance, measures, parallel sets.

Only shapes with closed-form distance functions, volumes, surface areas and
smoothness radii are supported, so that every geometric quantity entering
the trace experiments is exact and all statistical error stays inside the
Monte Carlo estimators.  The smoothness radius R is the largest radius such
that every boundary point carries an interior and an exterior tangent ball
of radius R; the box has corners and carries R = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import UnboundedDomainError

__all__ = [
    "Ball",
    "Annulus",
    "Box",
    "Interval",
    "HalfSpace",
    "WholeSpace",
    "DomainMeasures",
    "ParallelSetReport",
    "distance_to_boundary",
    "measures",
    "parallel_set",
    "inradius",
    "inner_volume",
    "sample_layer",
]


def ball_volume(d: int, r: float) -> float:
    return math.pi ** (d / 2.0) * r ** d / special.gamma(d / 2.0 + 1.0)


def sphere_area(d: int, r: float) -> float:
    return 2.0 * math.pi ** (d / 2.0) * r ** (d - 1) / special.gamma(d / 2.0)


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("ball radius must be positive")
        object.__setattr__(self, "center", tuple(float(c) for c in np.atleast_1d(self.center)))

    @property
    def d(self) -> int:
        return len(self.center)

    @property
    def bounded(self) -> bool:
        return True

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.radius - np.linalg.norm(x - np.asarray(self.center), axis=-1)


@dataclass(frozen=True)
class Annulus:
    center: tuple
    r_inner: float
    r_outer: float

    def __post_init__(self):
        if not (0 < self.r_inner < self.r_outer):
            raise ValueError("need 0 < r_inner < r_outer")
        object.__setattr__(self, "center", tuple(float(c) for c in np.atleast_1d(self.center)))

    @property
    def d(self) -> int:
        return len(self.center)

    @property
    def bounded(self) -> bool:
        return True

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        rho = np.linalg.norm(np.asarray(x, dtype=float) - np.asarray(self.center), axis=-1)
        return np.minimum(rho - self.r_inner, self.r_outer - rho)


@dataclass(frozen=True)
class Box:
    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo = tuple(float(c) for c in np.atleast_1d(self.lo))
        hi = tuple(float(c) for c in np.atleast_1d(self.hi))
        if len(lo) != len(hi) or any(a >= b for a, b in zip(lo, hi)):
            raise ValueError("need lo < hi componentwise")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def d(self) -> int:
        return len(self.lo)

    @property
    def bounded(self) -> bool:
        return True

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        lo = np.asarray(self.lo)
        hi = np.asarray(self.hi)
        return np.minimum((x - lo).min(axis=-1), (hi - x).min(axis=-1))


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if self.a >= self.b:
            raise ValueError("need a < b")

    @property
    def d(self) -> int:
        return 1

    @property
    def bounded(self) -> bool:
        return True

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.ndim and x.shape[-1] == 1:
            x = x[..., 0]
        return np.minimum(x - self.a, self.b - x)


@dataclass(frozen=True)
class HalfSpace:
    """Open half-space {x : x[axis] > 0}."""

    d: int
    axis: int = 0

    def __post_init__(self):
        if not (0 <= self.axis < self.d):
            raise ValueError("axis out of range")

    @property
    def bounded(self) -> bool:
        return False

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(x, dtype=float)[..., self.axis]


@dataclass(frozen=True)
class WholeSpace:
    """Degenerate domain with no boundary; the exit time is infinite."""

    d: int

    @property
    def bounded(self) -> bool:
        return False

    def signed_depth(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.full(x.shape[:-1] if x.ndim > 1 else (), np.inf)


@dataclass(frozen=True)
class DomainMeasures:
    volume: float
    surface_area: float
    smoothness_radius: float
    is_r_smooth: bool


@dataclass(frozen=True)
class ParallelSetReport:
    q: float
    boundary_area_q: float
    volume_q: float


def distance_to_boundary(x, domain) -> np.ndarray:
    """Distance to the boundary for x inside the domain; 0 outside by convention."""
    return np.maximum(domain.signed_depth(x), 0.0)


def measures(domain) -> DomainMeasures:
    """Exact volume, surface area and smoothness radius of a bounded domain."""
    if isinstance(domain, Ball):
        d, r = domain.d, domain.radius
        return DomainMeasures(ball_volume(d, r), sphere_area(d, r), r, True)
    if isinstance(domain, Annulus):
        d = domain.d
        ri, ro = domain.r_inner, domain.r_outer
        vol = ball_volume(d, ro) - ball_volume(d, ri)
        area = sphere_area(d, ro) + sphere_area(d, ri)
        # interior tangent balls are limited by the shell width, exterior
        # ones at the inner sphere by the hole radius
        return DomainMeasures(vol, area, min(0.5 * (ro - ri), ri), True)
    if isinstance(domain, Box):
        lo = np.asarray(domain.lo)
        hi = np.asarray(domain.hi)
        ext = hi - lo
        vol = float(np.prod(ext))
        area = float(sum(2.0 * vol / e for e in ext))
        return DomainMeasures(vol, area, 0.0, False)
    if isinstance(domain, Interval):
        w = domain.b - domain.a
        return DomainMeasures(w, 2.0, 0.5 * w, True)
    raise UnboundedDomainError(f"measures undefined for unbounded domain {type(domain).__name__}")


def inradius(domain) -> float:
    if isinstance(domain, Ball):
        return domain.radius
    if isinstance(domain, Annulus):
        return 0.5 * (domain.r_outer - domain.r_inner)
    if isinstance(domain, Box):
        return 0.5 * float(np.min(np.asarray(domain.hi) - np.asarray(domain.lo)))
    if isinstance(domain, Interval):
        return 0.5 * (domain.b - domain.a)
    raise UnboundedDomainError(f"inradius undefined for {type(domain).__name__}")


def inner_volume(domain, q: float) -> float:
    """Volume of the inner parallel set {x in D : dist(x, boundary) > q}."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q >= inradius(domain):
        return 0.0
    if isinstance(domain, Ball):
        return ball_volume(domain.d, domain.radius - q)
    if isinstance(domain, Annulus):
        return ball_volume(domain.d, domain.r_outer - q) - ball_volume(domain.d, domain.r_inner + q)
    if isinstance(domain, Box):
        ext = np.asarray(domain.hi) - np.asarray(domain.lo) - 2.0 * q
        return float(np.prod(ext))
    if isinstance(domain, Interval):
        return domain.b - domain.a - 2.0 * q
    raise UnboundedDomainError(f"inner_volume undefined for {type(domain).__name__}")


def parallel_set(domain, q: float) -> ParallelSetReport:
    """Exact boundary area and volume of the inner parallel set.

    Supported for the ball and the annulus, where the parallel set is again
    a ball or annulus; q must stay below the smoothness radius.
    """
    m = measures(domain)
    if not (0.0 <= q < m.smoothness_radius):
        raise ValueError(f"q must lie in [0, R={m.smoothness_radius}), got {q}")
    if isinstance(domain, Ball):
        return ParallelSetReport(q, sphere_area(domain.d, domain.radius - q),
                                 ball_volume(domain.d, domain.radius - q))
    if isinstance(domain, Annulus):
        d = domain.d
        ri, ro = domain.r_inner + q, domain.r_outer - q
        return ParallelSetReport(q, sphere_area(d, ro) + sphere_area(d, ri),
                                 ball_volume(d, ro) - ball_volume(d, ri))
    raise ValueError(f"parallel sets are closed-form only for ball and annulus, "
                     f"got {type(domain).__name__}")


def _uniform_in_shell(center, r_lo, r_hi, d, n, gen):
    """Uniform points in the spherical shell r_lo <= |x - center| <= r_hi."""
    u = gen.uniform(size=n)
    rho = (r_lo ** d + u * (r_hi ** d - r_lo ** d)) ** (1.0 / d)
    z = gen.standard_normal((n, d))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return np.asarray(center) + rho[:, None] * z


def sample_layer(domain, q_lo: float, q_hi: float, n: int, gen) -> np.ndarray:
    """Uniform points in the depth layer {q_lo <= dist(x, boundary) < q_hi}."""
    if not (0.0 <= q_lo < q_hi):
        raise ValueError("need 0 <= q_lo < q_hi")
    if isinstance(domain, Ball):
        r = domain.radius
        return _uniform_in_shell(domain.center, max(r - q_hi, 0.0), r - q_lo, domain.d, n, gen)
    if isinstance(domain, Annulus):
        d = domain.d
        ri, ro = domain.r_inner, domain.r_outer
        mid = 0.5 * (ri + ro)
        in_lo, in_hi = ri + q_lo, min(ri + q_hi, mid)
        out_lo, out_hi = max(ro - q_hi, mid), ro - q_lo
        v_in = ball_volume(d, in_hi) - ball_volume(d, in_lo)
        v_out = ball_volume(d, out_hi) - ball_volume(d, out_lo)
        take_in = gen.uniform(size=n) < v_in / (v_in + v_out)
        pts = np.empty((n, d))
        n_in = int(take_in.sum())
        if n_in:
            pts[take_in] = _uniform_in_shell(domain.center, in_lo, in_hi, d, n_in, gen)
        if n - n_in:
            pts[~take_in] = _uniform_in_shell(domain.center, out_lo, out_hi, d, n - n_in, gen)
        return pts
    if isinstance(domain, Box):
        lo = np.asarray(domain.lo) + q_lo
        hi = np.asarray(domain.hi) - q_lo
        out = np.empty((n, domain.d))
        have = 0
        for _ in range(1000):
            # candidates already have depth >= q_lo; reject the deep interior
            cand = gen.uniform(lo, hi, size=(max(2 * (n - have), 16), domain.d))
            keep = cand[domain.signed_depth(cand) < q_hi]
            take = min(len(keep), n - have)
            out[have:have + take] = keep[:take]
            have += take
            if have == n:
                return out
        raise RuntimeError("layer rejection sampling failed to fill the batch")
    raise ValueError(f"layer sampling unsupported for {type(domain).__name__}")
