"""Built-in oracle suite behind ``hsbound verify``.

Every check compares a production code path against something computed a
different way: quadrature, enumeration, partial sums or hand-derived
stationary points.
"""

import math
import time
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .bounds import optimize_a, pressure_series_tail
from .combinatorics import cayley_count, prufer_enumerate
from .geometry import sample_unit_ball, substream
from .gtable import GTildeTable, estimate_g_tilde, exact_g_tilde


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}: {self.detail} ({self.seconds:.2f}s)"


# -- oracles ---------------------------------------------------------------

def lens_area(r):
    """Overlap area of two unit disks whose centers are r apart (0 <= r <= 2)."""
    return 2 * math.acos(r / 2) - (r / 2) * math.sqrt(4 - r * r)


def g2_pair_quadrature():
    """g~_2(2) by integrating the lens area over the first point's radius.

    P(|X - Y| <= 1) = (1/pi^2) * int_0^1 2 pi r * lens(r) dr.
    """
    val, _ = integrate.quad(lambda r: 2 * math.pi * r * lens_area(r), 0.0, 1.0, epsabs=1e-13, epsrel=1e-13)
    return 1.0 - val / math.pi**2


def g1_pair_grid(step=1e-3):
    """g~_1(2) by midpoint grid over [-1, 1]^2."""
    m = int(round(2 / step))
    x = -1 + step * (np.arange(m) + 0.5)
    hits = 0
    for xi in x:
        hits += int(np.count_nonzero(np.abs(xi - x) > 1.0))
    return hits / (m * m)


def tail_partial_sum(x, n_max):
    return math.fsum(x**n / (n * (n - 1)) for n in range(2, n_max + 1))


def sq_norm_moment(d, n, seed=0):
    """(mean, standard error) of |X|^2 for n ball samples."""
    pts = sample_unit_ball(n, d, substream(seed, 1000 + d))
    r2 = np.einsum("ij,ij->i", pts, pts)
    return float(r2.mean()), float(r2.std(ddof=1) / math.sqrt(n))


# -- checks ----------------------------------------------------------------

def check_sampler(n=10**6):
    worst = []
    ok = True
    for d in (1, 2, 3, 5):
        mean, se = sq_norm_moment(d, n)
        z = (mean - d / (d + 2)) / se
        worst.append(f"d={d} z={z:+.2f}")
        ok &= abs(z) < 4
    return ok, "E|X|^2 vs d/(d+2): " + ", ".join(worst)


def check_g1_exact(samples=10**6):
    grid = g1_pair_grid()
    exact = exact_g_tilde(1, 2)
    est = estimate_g_tilde(1, 2, samples, master_seed=7)
    z = (est.mean - exact) / est.std_error
    ok = abs(grid - exact) < 1e-3 and abs(z) < 5 and exact_g_tilde(1, 3) == 0.0
    return ok, f"exact={exact} grid={grid:.6f} mc={est.mean:.5f} (z={z:+.2f})"


def check_g2_closed_form():
    quad = g2_pair_quadrature()
    exact = exact_g_tilde(2, 2)
    ok = abs(quad - exact) < 1e-12
    return ok, f"closed form {exact!r} vs quadrature {quad!r}"


def check_g2_monte_carlo(samples=10**6):
    exact = exact_g_tilde(2, 2)
    est = estimate_g_tilde(2, 2, samples, master_seed=11)
    z = (est.mean - exact) / est.std_error
    return abs(z) < 5, f"mc={est.mean:.5f} vs {exact:.10f} (z={z:+.2f})"


def check_cayley_prufer(n_max=7):
    for n in range(2, n_max + 1):
        hist = prufer_enumerate(n)
        if sum(hist.values()) != n ** (n - 2):
            return False, f"n={n}: total {sum(hist.values())} != {n ** (n - 2)}"
        for seq, count in hist.items():
            if cayley_count(seq) != count:
                return False, f"n={n}: {seq} enumerated {count}, formula {cayley_count(seq)}"
    return True, f"n=2..{n_max} agree; n={n_max} total {n_max ** (n_max - 2)}"


def check_tail():
    err = max(abs(pressure_series_tail(x) - tail_partial_sum(x, 2000)) for x in (0.1, 0.3, 0.5, 0.7, 0.9))
    return err < 1e-10, f"max |closed form - partial sum| = {err:.2e}"


def check_optimizer():
    a1, b1 = optimize_a(GTildeTable.from_values(1, [1, 1, 1]))
    a2, b2 = optimize_a(GTildeTable.from_values(1, [1, 1, 0.25]))
    errs = [abs(a1 - math.sqrt(2)), abs(b1 - (math.sqrt(2) - 1)),
            abs(a2 - 2 * math.sqrt(2)), abs(b2 - (2 - math.sqrt(2)))]
    return max(errs) < 1e-8, f"(1,1,1): a*={a1!r}; (1,1,1/4): bound={b2!r}; max err {max(errs):.1e}"


CHECKS = [
    ("sampler moments", check_sampler),
    ("d=1 exact values", check_g1_exact),
    ("g~_2(2) closed form", check_g2_closed_form),
    ("g~_2(2) monte carlo", check_g2_monte_carlo),
    ("cayley vs prufer", check_cayley_prufer),
    ("series tail", check_tail),
    ("synthetic optimizer", check_optimizer),
]


def run_checks(checks=None):
    results = []
    for name, fn in checks or CHECKS:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
