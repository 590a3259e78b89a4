"""Uniform sampling in the unit d-ball and the hard-core predicate.

Units are normalized so the sphere diameter is 1: two centers conflict
when their distance is <= 1, and all centers live in the closed unit ball.
Points are plain float arrays of length d; a configuration is a (k, d) array.
"""

import math

import numpy as np

from .errors import InvalidConfigurationError, InvalidDimensionError

# Above this dimension cube rejection wastes too many draws (acceptance at
# d=4 is pi^2/32 ~ 30.8%, at d=5 only ~16.4%).
REJECTION_MAX_DIM = 4


def _check_dim(d):
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 1:
        raise InvalidDimensionError(f"dimension must be a positive integer, got {d!r}")
    return int(d)


def volume_unit_ball(d):
    """pi^(d/2) / Gamma(d/2 + 1). Multiply by R**d for a ball of radius R."""
    d = _check_dim(d)
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def substream(master_seed, *key):
    """Independent generator keyed by ``(master_seed, *key)``.

    Keys are folded into the SeedSequence spawn key, so any chunk's stream
    can be rebuilt without touching the others.
    """
    entropy = int(master_seed) % (1 << 64)
    ss = np.random.SeedSequence(entropy, spawn_key=tuple(int(x) for x in key))
    return np.random.Generator(np.random.PCG64(ss))


def sample_unit_ball(n, d, stream):
    """Return an (n, d) array of points uniform in the closed unit d-ball."""
    d = _check_dim(d)
    if n == 0:
        return np.empty((0, d))
    if d <= REJECTION_MAX_DIM:
        out = np.empty((n, d))
        filled = 0
        acc = volume_unit_ball(d) / 2.0**d
        while filled < n:
            need = n - filled
            batch = int(need / acc * 1.05) + 16
            cand = stream.uniform(-1.0, 1.0, size=(batch, d))
            cand = cand[np.einsum("ij,ij->i", cand, cand) <= 1.0]
            take = min(need, len(cand))
            out[filled:filled + take] = cand[:take]
            filled += take
        return out
    g = stream.standard_normal((n, d))
    g /= np.linalg.norm(g, axis=1)[:, None]
    r = stream.random(n) ** (1.0 / d)
    return g * r[:, None]


def sample_point_in_unit_ball(d, stream):
    return sample_unit_ball(1, d, stream)[0]


def _as_configuration(config):
    try:
        pts = np.asarray(config, dtype=float)
    except ValueError as exc:
        raise InvalidConfigurationError(f"points have mixed dimensions: {exc}") from None
    if pts.size == 0:
        return pts.reshape(0, 0)
    if pts.ndim != 2:
        raise InvalidConfigurationError(f"expected a sequence of points, got shape {pts.shape}")
    return pts


def is_hardcore_valid(config):
    """True iff every pair of points is at distance strictly greater than 1."""
    pts = _as_configuration(config)
    k = len(pts)
    for i in range(k):
        for j in range(i + 1, k):
            diff = pts[i] - pts[j]
            if diff @ diff <= 1.0:
                return False
    return True


def count_valid(points):
    """Count configurations in a (n, k, d) batch that satisfy the hard-core rule.

    Vectorized twin of :func:`is_hardcore_valid`; pairs are checked one at a
    time and rows are dropped as soon as a conflict shows up.
    """
    n, k, _ = points.shape
    if k <= 1:
        return n
    alive = points
    for i in range(1, k):
        for j in range(i):
            diff = alive[:, i] - alive[:, j]
            alive = alive[np.einsum("ij,ij->i", diff, diff) > 1.0]
            if len(alive) == 0:
                return 0
    return len(alive)
