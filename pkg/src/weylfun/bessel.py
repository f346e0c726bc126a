"""Bessel functions of the first kind, integer order, by three independent
methods (ascending series, periodic-trapezoid integral, Miller downward
recurrence) plus the classical identities built on them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import AccuracyError, DomainError

_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)  # i**n cycles with period 4


@dataclass(frozen=True)
class BesselEvalConfig:
    series_tol: float = 1e-16
    quad_nodes: int = 64
    miller_pad: int = 20

    def __post_init__(self):
        if not self.series_tol > 0:
            raise ValueError("series_tol must be positive")
        if self.quad_nodes < 8 or self.quad_nodes % 2:
            raise ValueError("quad_nodes must be even and >= 8")
        if self.miller_pad < 10:
            raise ValueError("miller_pad must be >= 10")


def j_series(n: int, x: float, tol: float = 1e-16) -> float:
    """Ascending power series with multiplicative term updates.

    Terms are built from their predecessor, so no factorial is ever formed
    past the first; the sum stops once the next term is below
    tol*(1+|sum|) and the term magnitudes have started to decay.
    """
    if n < 0:
        raise ValueError("j_series takes n >= 0; use j_signed for negative orders")
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if x < 0:
        return (-1) ** n * j_series(n, -x, tol)
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    half = x / 2.0
    half_sq = half * half
    if n <= 120:
        term = half ** n / math.factorial(n)
    else:
        term = math.exp(n * math.log(half) - math.lgamma(n + 1))
    total = term
    for m in range(1000):
        nxt = -term * half_sq / ((m + 1) * (m + n + 1))
        past_peak = (m + 1) * (m + n + 1) > half_sq
        if past_peak and abs(nxt) < tol * (1.0 + abs(total)):
            total += nxt
            return total
        term = nxt
        total += term
    raise AccuracyError(f"series for J_{n}({x}) did not settle in 1000 terms")


def j_integral(n: int, x: float, quad_nodes: int) -> float:
    """Trapezoid rule on (1/2pi) int_{-pi}^{pi} e^{-i(n tau - x sin tau)} dtau.

    The integrand is 2pi-periodic, so the equal-weight sum converges
    geometrically in the node count.  The imaginary part must cancel; if
    it does not, the node count was too small.
    """
    if quad_nodes < 8 or quad_nodes % 2:
        raise ValueError("quad_nodes must be even and >= 8")
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    h = 2.0 * math.pi / quad_nodes
    acc = 0j
    for k in range(quad_nodes):
        tau = -math.pi + k * h
        acc += cmath.exp(-1j * (n * tau - x * math.sin(tau)))
    val = acc / quad_nodes
    if abs(val.imag) > 1e-12 * (1.0 + abs(val.real)):
        raise AccuracyError(
            f"imaginary residue {val.imag:.3e} for J_{n}({x}) at {quad_nodes} nodes"
        )
    return val.real


def j_integral_auto(n: int, x: float, start_nodes: int = 64, cap: int = 4096) -> float:
    """Node-doubling wrapper around j_integral, stopping at 1e-14 agreement."""
    nodes = start_nodes
    prev = j_integral(n, x, nodes)
    while nodes < cap:
        nodes *= 2
        cur = j_integral(n, x, nodes)
        if abs(cur - prev) < 1e-14:
            return cur
        prev = cur
    return prev


def j_miller(n_max: int, x: float, pad: int = 20) -> list:
    """J_0..J_{n_max} by downward recurrence from a padded trial order.

    Upward recurrence is unstable for orders above x, so recurse downward
    from n_max + pad + ceil(x) with trial values (1, 0) and normalize with
    J_0 + 2 sum_{k>=1} J_{2k} = 1, the t = 1 slice of the generating
    function.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"j_miller requires finite x >= 0, got {x!r}")
    if x == 0.0:
        return [1.0] + [0.0] * n_max
    start = n_max + pad + math.ceil(x)
    vals = [0.0] * (start + 2)
    vals[start] = 1.0
    for k in range(start, 0, -1):
        vals[k - 1] = (2.0 * k / x) * vals[k] - vals[k + 1]
        if abs(vals[k - 1]) > 1e250:
            for i in range(k - 1, start + 2):
                vals[i] *= 1e-250
    norm = vals[0] + 2.0 * sum(vals[k] for k in range(2, start + 1, 2))
    return [v / norm for v in vals[: n_max + 1]]


def j_signed(n: int, x: float, tol: float = 1e-16) -> float:
    """J_n for any integer order via J_{-n} = (-1)^n J_n.

    The reflection identity is forced by the t -> -1/t symmetry of the
    generating function, which fixes the left side while mapping
    t^n J_n to (-1)^n t^{-n} J_n.
    """
    if n >= 0:
        return j_series(n, x, tol)
    return (-1) ** n * j_series(-n, x, tol)


def j_derivative_m(n: int, m: int, x: float) -> float:
    """m-th derivative: 2^-m sum_{k=0}^{m} (-1)^k C(m,k) J_{n-m+2k}."""
    if m < 0:
        raise ValueError("m must be >= 0")
    acc = 0.0
    for k in range(m + 1):
        acc += (-1) ** k * math.comb(m, k) * j_signed(n - m + 2 * k, x)
    return acc / 2.0 ** m


def j_addition(n: int, x: float, y: float, k_cut: int = 30) -> float:
    """Truncated addition formula sum_{|k|<=K} J_{n-k}(x) J_k(y)."""
    if k_cut < 0:
        raise ValueError("k_cut must be >= 0")
    acc = 0.0
    for k in range(-k_cut, k_cut + 1):
        acc += j_signed(n - k, x) * j_signed(k, y)
    return acc


def jacobi_anger_partial(x: float, y: float, n_cut: int = 40) -> tuple:
    """Two-sided partial sums of the plane-wave expansions.

    Returns (cos_sum, sin_sum) where cos_sum approximates e^{ix cos y}
    through sum i^n J_n(x) e^{iny} and sin_sum approximates e^{ix sin y}
    through sum J_n(x) e^{iny}.
    """
    if n_cut < 0:
        raise ValueError("n_cut must be >= 0")
    cos_sum = 0j
    sin_sum = 0j
    for n in range(-n_cut, n_cut + 1):
        jn = j_signed(n, x)
        phase = cmath.exp(1j * n * y)
        cos_sum += _I_POW[n % 4] * jn * phase
        sin_sum += jn * phase
    return cos_sum, sin_sum


def j_genfun_partial(t: float, x: float, n_cut: int) -> float:
    """Two-sided partial sum of sum t^n J_n(x) (compare e^{x(t-1/t)/2})."""
    if t == 0:
        raise DomainError("generating variable t must be nonzero")
    if n_cut < 0:
        raise ValueError("n_cut must be >= 0")
    acc = 0.0
    for n in range(-n_cut, n_cut + 1):
        acc += t ** n * j_signed(n, x)
    return acc


def j_translate_partial(n: int, x: float, y: float, m_cut: int = 30) -> float:
    """Taylor translation sum_{m<=M} y^m/m! d^m/dx^m J_n(x)."""
    if m_cut < 0:
        raise ValueError("m_cut must be >= 0")
    acc = 0.0
    weight = 1.0  # y^m / m!
    for m in range(m_cut + 1):
        acc += weight * j_derivative_m(n, m, x)
        weight *= y / (m + 1)
    return acc


def j_ode_residual(n: int, x: float) -> float:
    """x^2 y'' + x y' + (x^2 - n^2) y with derivatives from j_derivative_m."""
    if not x > 0:
        raise DomainError(f"residual is evaluated for x > 0, got {x!r}")
    y = j_signed(n, x)
    y1 = j_derivative_m(n, 1, x)
    y2 = j_derivative_m(n, 2, x)
    return x * x * y2 + x * y1 + (x * x - n * n) * y
