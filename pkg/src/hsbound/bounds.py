"""C_d(a), its optimization, and the resulting analyticity bound.

With coefficients v_s = g~_d(s), C(a) = sum_s v_s a^s / s! and the pressure
is analytic for |z| V_d(R) strictly below max_a a / C(a). Because every v_s
is nonnegative, log C is convex in t = log a, so t - log C(e^t) is concave
and the maximizer is unique.
"""

import hashlib
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import DegenerateTableError, DivergenceError, InvalidArgumentError
from .gtable import GTildeTable

INV_PHI = (math.sqrt(5) - 1) / 2
SEARCH_FLOOR = 1e-3


@dataclass(frozen=True)
class BoundReport:
    d: int
    mode: str
    a_star: float
    c_at_a_star: float
    bound: float
    classical: float
    improvement_ratio: float
    gtable_fingerprint: str
    curve: Optional[Tuple[Tuple[float, float], ...]] = None


def classical_bound():
    """1/e, the textbook limit on |z| V_d(R)."""
    return math.exp(-1.0)


def _coefficients(table, mode):
    if isinstance(table, GTildeTable):
        return table.coefficients(mode)
    return [float(v) for v in table]


def _poly(coeffs, a):
    """sum v_s a^s / s!, evaluated term by term (a^s/s! built incrementally)."""
    total = 0.0
    term = 1.0
    for s, v in enumerate(coeffs):
        if s:
            term *= a / s
        total += v * term
    return total


def c_polynomial(table, a, mode="mean"):
    if a < 0:
        raise InvalidArgumentError(f"a must be >= 0, got {a}")
    return _poly(_coefficients(table, mode), a)


def _slope(coeffs, a):
    """d/dt log(a / C(a)) at t = log a, i.e. 1 - a C'(a) / C(a).

    Computed as (sum_s (1 - s) v_s a^s/s!) / C(a); strictly decreasing in t.
    """
    num = 0.0
    den = 0.0
    term = 1.0
    for s, v in enumerate(coeffs):
        if s:
            term *= a / s
        num += (1 - s) * v * term
        den += v * term
    return num / den


def optimize_a(table, mode="mean", search_cap=1e3):
    """Maximize a / C(a) over (0, search_cap]; returns (a_star, bound).

    Golden-section search on log a brackets the maximum; the bracket is then
    bisected on the sign of the log-derivative, which reaches full double
    precision where comparing function values alone stalls near sqrt(eps).
    """
    coeffs = _coefficients(table, mode)
    if not any(v > 0 for v in coeffs[2:]):
        raise DegenerateTableError(
            "all coefficients with s >= 2 are zero: a/C(a) increases to 1 as a -> inf, "
            "so the bound is the vacuous 1 (in units of 1/V_d(R)) and there is nothing to optimize")
    if not search_cap > SEARCH_FLOOR:
        raise InvalidArgumentError(f"search_cap must exceed {SEARCH_FLOOR}")

    def g(t):
        a = math.exp(t)
        return t - math.log(_poly(coeffs, a))

    lo, hi = math.log(SEARCH_FLOOR), math.log(search_cap)
    if _slope(coeffs, search_cap) >= 0:
        return search_cap, search_cap / _poly(coeffs, search_cap)
    if _slope(coeffs, SEARCH_FLOOR) <= 0:
        lo_a = SEARCH_FLOOR
        return lo_a, lo_a / _poly(coeffs, lo_a)

    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = g(x1), g(x2)
    while hi - lo > 1e-6:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = g(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = g(x1)
    # g is concave, so the maximizer lies in [lo, hi]; widen slightly for
    # float ties in the comparisons above.
    lo -= 1e-6
    hi += 1e-6
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _slope(coeffs, math.exp(mid)) > 0:
            lo = mid
        else:
            hi = mid
    a_star = math.exp(0.5 * (lo + hi))
    return a_star, a_star / _poly(coeffs, a_star)


def pressure_series_tail(x):
    """sum_{n>=2} x^n / (n (n-1)) = x + (1 - x) ln(1 - x), for 0 <= x < 1."""
    if x < 0:
        raise InvalidArgumentError(f"x must be >= 0, got {x}")
    if x >= 1:
        raise DivergenceError(f"x = {x} >= 1: the series is outside its open disk of convergence")
    return x + (1 - x) * math.log1p(-x)


def table_fingerprint(table):
    from .serialize import dumps_table

    return "sha256:" + hashlib.sha256(dumps_table(table).encode()).hexdigest()


def curve_points(table, a_star, n, mode="mean"):
    """n pairs (a, a/C(a)) log-uniform over [a_star/10, 10 a_star].

    The grid point closest to a_star is replaced by a_star itself so the
    curve's maximum row is the optimum, not whichever neighbour the
    asymmetry of f happens to favour.
    """
    coeffs = _coefficients(table, mode)
    if n == 1:
        grid = [a_star]
    else:
        grid = np.geomspace(a_star / 10, a_star * 10, n)
        grid[np.argmin(np.abs(np.log(grid / a_star)))] = a_star
        grid = grid.tolist()
    return tuple((a, a / _poly(coeffs, a)) for a in grid)


def bound_report(table, mode="mean", curve_samples=0, search_cap=1e3):
    a_star, bound = optimize_a(table, mode, search_cap)
    c = c_polynomial(table, a_star, mode)
    classical = classical_bound()
    curve = curve_points(table, a_star, curve_samples, mode) if curve_samples > 0 else None
    return BoundReport(
        d=table.d,
        mode=mode,
        a_star=a_star,
        c_at_a_star=c,
        bound=bound,
        classical=classical,
        improvement_ratio=bound / classical,
        gtable_fingerprint=table_fingerprint(table),
        curve=curve,
    )
