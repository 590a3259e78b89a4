"""Binomial proportion intervals for hit-or-miss estimates."""

import math

from scipy import stats

# Below this many hits the normal approximation is unreliable.
NORMAL_MIN_HITS = 100


def rule_of_three(samples, level=0.95):
    """Upper confidence limit for p after 0 hits in ``samples`` trials.

    At the 95% level this is the textbook 3/n; other levels use the exact
    zero-hit bound -ln(1 - level)/n.
    """
    if level == 0.95:
        return min(1.0, 3.0 / samples)
    return min(1.0, -math.log1p(-level) / samples)


def clopper_pearson(hits, samples, level=0.95):
    alpha = 1.0 - level
    lo = 0.0 if hits == 0 else float(stats.beta.ppf(alpha / 2, hits, samples - hits + 1))
    hi = 1.0 if hits == samples else float(stats.beta.ppf(1 - alpha / 2, hits + 1, samples - hits))
    return lo, hi


def binomial_interval(hits, samples, level=0.95):
    """(low, high) interval for a Bernoulli proportion.

    Zero hits -> (0, rule of three); fewer than 100 hits -> Clopper-Pearson;
    otherwise mean +/- z * stderr clipped to [0, 1].
    """
    if hits == 0:
        return 0.0, rule_of_three(samples, level)
    if hits < NORMAL_MIN_HITS:
        return clopper_pearson(hits, samples, level)
    p = hits / samples
    se = math.sqrt(p * (1 - p) / samples)
    z = float(stats.norm.ppf(0.5 + level / 2))
    return max(0.0, p - z * se), min(1.0, p + z * se)
