"""Tables of normalized exclusion volumes g~_d(k).

g~_d(k) is the probability that k independent uniform points in the unit
d-ball are pairwise more than distance 1 apart. Small cases have closed
forms; the rest come from a chunked hit-or-miss estimator whose result
depends only on (d, k, samples, master_seed, chunk_size).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

from .config import RunConfig
from .errors import InvalidArgumentError
from .geometry import _check_dim, count_valid, sample_unit_ball, substream
from .stats import binomial_interval

G2_PAIR = 3 * math.sqrt(3) / (4 * math.pi)

EXACT = "exact"
MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    hits: int
    samples: int
    std_error: float
    ci_low: float
    ci_high: float
    confidence_level: float

    @classmethod
    def from_counts(cls, hits, samples, confidence_level=0.95):
        if samples < 1 or not 0 <= hits <= samples:
            raise InvalidArgumentError(f"bad counts: hits={hits}, samples={samples}")
        mean = hits / samples
        lo, hi = binomial_interval(hits, samples, confidence_level)
        return cls(
            mean=mean,
            hits=int(hits),
            samples=int(samples),
            std_error=math.sqrt(mean * (1 - mean) / samples),
            ci_low=lo,
            ci_high=hi,
            confidence_level=confidence_level,
        )

    @property
    def rel_error(self):
        return self.std_error / self.mean if self.mean > 0 else math.inf


@dataclass(frozen=True)
class GTildeEntry:
    k: int
    value: float
    source: str
    estimate: Optional[MCEstimate] = None
    exact_form: Optional[str] = None

    @property
    def upper(self):
        """Coefficient used in conservative mode."""
        return self.estimate.ci_high if self.source == MONTE_CARLO else self.value


@dataclass(frozen=True)
class GTildeTable:
    """Entries for k = 0..k_max, all positive.

    ``terminal`` is the entry at k_max + 1 that stopped the build: an exact
    zero, or a zero-hit Monte Carlo run whose rule-of-three upper limit is
    still used in conservative mode.
    """

    d: int
    entries: Tuple[GTildeEntry, ...]
    k_max: int
    truncation_note: str
    terminal: Optional[GTildeEntry] = None
    metadata: Optional[dict] = None

    def values(self):
        return [e.value for e in self.entries]

    def coefficients(self, mode="mean"):
        """g~ values used to build C_d(a), index s = 0, 1, ..."""
        if mode == "mean":
            return self.values()
        if mode == "conservative":
            coeffs = [e.upper for e in self.entries]
            if self.terminal is not None:
                coeffs.append(self.terminal.upper)
            return coeffs
        raise InvalidArgumentError(f"unknown mode {mode!r}")

    @classmethod
    def from_values(cls, d, values, note="synthetic table"):
        """Table of exact entries, mostly for tests and hand calculations."""
        entries = tuple(
            GTildeEntry(k=k, value=float(v), source=EXACT, exact_form=repr(float(v)))
            for k, v in enumerate(values)
        )
        return cls(d=d, entries=entries, k_max=len(entries) - 1, truncation_note=note)


def _exact_with_form(d, k):
    if k == 0:
        return 1.0, "1 (empty configuration)"
    if k == 1:
        return 1.0, "1 (one point always fits)"
    if d == 1:
        if k == 2:
            return 0.25, "1/4"
        return 0.0, "0 (k >= 3 points pairwise > 1 apart need span > 2)"
    if d == 2:
        if k == 2:
            return G2_PAIR, "3*sqrt(3)/(4*pi)"
        if k >= 6:
            return 0.0, "0 (k >= 6 points pairwise > 1 apart do not fit in the closed unit disk)"
    if k >= 3**d:
        return 0.0, "0 (packing cap: radius-1/2 balls in a radius-3/2 ball)"
    return None


def exact_g_tilde(d, k):
    """Closed-form g~_d(k) where one is known, else None."""
    d = _check_dim(d)
    if k < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k}")
    found = _exact_with_form(d, k)
    return None if found is None else found[0]


def exact_form(d, k):
    found = _exact_with_form(_check_dim(d), k)
    return None if found is None else found[1]


def _chunk_hits(d, k, n, master_seed, chunk_index):
    rng = substream(master_seed, d, k, chunk_index)
    pts = sample_unit_ball(n * k, d, rng).reshape(n, k, d)
    return count_valid(pts)


def estimate_g_tilde(d, k, samples, master_seed=42, chunk_size=10**5,
                     confidence_level=0.95, workers=1):
    """Hit-or-miss estimate of g~_d(k).

    Samples are split into chunks of ``chunk_size``; chunk i draws from the
    substream keyed by (master_seed, d, k, i), so the hit count is the same
    for any ``workers``.
    """
    d = _check_dim(d)
    if k < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k}")
    if samples < 1 or chunk_size < 1:
        raise InvalidArgumentError("samples and chunk_size must be >= 1")
    if not 0 < confidence_level < 1:
        raise InvalidArgumentError("confidence_level must lie in (0, 1)")
    sizes = [chunk_size] * (samples // chunk_size)
    if samples % chunk_size:
        sizes.append(samples % chunk_size)
    if k <= 1:
        hits = samples
    elif workers is None or workers <= 1:
        hits = sum(_chunk_hits(d, k, n, master_seed, i) for i, n in enumerate(sizes))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda a: _chunk_hits(d, k, a[1], master_seed, a[0]),
                                enumerate(sizes)))
    return MCEstimate.from_counts(hits, samples, confidence_level)


def build_gtable(config, workers=1, progress=None):
    """Assemble g~_d(0..k_max) for ``config``.

    Each k uses the closed form when one exists, otherwise Monte Carlo. The
    build stops at the first exact zero or zero-hit estimate; that entry
    becomes ``terminal`` and k_max is the index before it.
    """
    d = config.d
    entries = []
    warnings = []
    terminal = None
    reason = None
    k = 0
    while True:
        found = _exact_with_form(d, k)
        if found is not None:
            value, form = found
            entry = GTildeEntry(k=k, value=value, source=EXACT, exact_form=form)
            if value == 0.0:
                terminal = entry
                reason = f"g~_{d}({k}) = 0 exactly: {form}"
        else:
            est = estimate_g_tilde(d, k, config.samples_per_k, config.master_seed,
                                   config.chunk_size, config.confidence_level, workers)
            entry = GTildeEntry(k=k, value=est.mean, source=MONTE_CARLO, estimate=est)
            if est.hits == 0:
                terminal = entry
                reason = (f"0 hits for k={k} in {est.samples} samples; "
                          f"upper limit {est.ci_high!r} kept for conservative mode")
            elif est.rel_error > config.rel_error_target:
                warnings.append(
                    f"k={k}: relative error {est.rel_error:.3g} exceeds target "
                    f"{config.rel_error_target:g}; increase samples_per_k")
        if progress is not None:
            progress(entry)
        if terminal is not None:
            break
        entries.append(entry)
        k += 1
    note = "; ".join([f"stopped at k={terminal.k}: {reason}"] + warnings)
    return GTildeTable(d=d, entries=tuple(entries), k_max=len(entries) - 1,
                       truncation_note=note, terminal=terminal,
                       metadata={"config": config.echo()})


__all__ = [
    "RunConfig",
    "MCEstimate",
    "GTildeEntry",
    "GTildeTable",
    "estimate_g_tilde",
    "exact_g_tilde",
    "exact_form",
    "build_gtable",
]
