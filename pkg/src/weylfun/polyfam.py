"""Hermite and associated Laguerre polynomial generation by independent
routes, the normalized oscillator functions psi_n, basis expansion, and
generating-function partial sums.

The symbol alpha is overloaded in the classical formulas: gen_alpha names
the Hermite generating-function variable, order_alpha the Laguerre order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import weyl
from .algebra import GaussRational, UniPoly, binom_shifted, ShiftedPoly, shifted_derivative
from .errors import DomainError, SingularityError


@dataclass(frozen=True)
class HermiteSet:
    """Hermite polynomials H_0..H_N, index = degree."""

    polys: tuple

    def __getitem__(self, n: int) -> UniPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


@dataclass(frozen=True)
class LaguerreSet:
    """Associated Laguerre polynomials L_0^a..L_N^a for a fixed order a."""

    alpha: Fraction
    polys: tuple

    def __getitem__(self, n: int) -> UniPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


# ---------------------------------------------------------------- Hermite

def hermite_recurrence(n_max: int) -> HermiteSet:
    """H_{n+1} = 2x H_n - 2n H_{n-1} from seeds H_0 = 1, H_1 = 2x."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    polys = [UniPoly.one()]
    if n_max >= 1:
        polys.append(UniPoly.monomial(1, 2))
    two_x = UniPoly.monomial(1, 2)
    for n in range(1, n_max):
        polys.append(two_x * polys[n] - polys[n - 1] * (2 * n))
    return HermiteSet(tuple(polys))


@lru_cache(maxsize=None)
def _hermite_upto(n_max: int) -> HermiteSet:
    return hermite_recurrence(n_max)


def hermite_rodrigues(n: int) -> UniPoly:
    """Differential route: iterate q -> 2x q - q' starting from 1.

    Each step performs one factor of the n-th derivative of the Gaussian
    with the e^(x^2) prefactor folded back in, so q_n is H_n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    q = UniPoly.one()
    two_x = UniPoly.monomial(1, 2)
    for _ in range(n):
        q = two_x * q - q.derivative()
    return q


def hermite_operator(n: int) -> UniPoly:
    """Operator route: (-i)^n (p + 2ix)^n applied to 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ladder = weyl.WeylOp({(0, 1): 1, (1, 0): GaussRational(0, 2)})  # p + 2ix
    raw = weyl.apply_to_one(ladder ** n)
    phase = GaussRational(0, -1) ** n
    out = raw * phase
    for k, c in out.terms():
        if not c.is_real():
            raise RuntimeError(
                f"imaginary coefficient {c} survived at degree {k}; operator algebra is broken"
            )
    return out


def hermite_ode_residual(n: int) -> UniPoly:
    """H_n'' - 2x H_n' + 2n H_n, which must be the zero polynomial."""
    h = _hermite_upto(n)[n]
    d1 = h.derivative()
    return d1.derivative() - UniPoly.monomial(1, 2) * d1 + h * (2 * n)


class _Root2:
    """Element a + b*sqrt(2) of the quadratic extension over the rationals."""

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction = Fraction(0), b: Fraction = Fraction(0)):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, other: "_Root2") -> "_Root2":
        return _Root2(self.a + other.a, self.b + other.b)

    def __mul__(self, other: "_Root2") -> "_Root2":
        return _Root2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def scaled(self, c: Fraction) -> "_Root2":
        return _Root2(self.a * c, self.b * c)


def _eval_root2(q: UniPoly, arg: _Root2) -> _Root2:
    acc = _Root2()
    for k in range(q.degree, -1, -1):
        c = q.coeff(k)
        if not c.is_real():
            raise ValueError("quadratic-extension evaluation needs real coefficients")
        acc = acc * arg + _Root2(c.re)
    return acc


def hermite_addition_check(n: int, x0, y0) -> tuple:
    """Both sides of H_n(x+y) = 2^(-n/2) sum_k C(n,k) H_k(sqrt2 x) H_{n-k}(sqrt2 y).

    The sqrt(2) arguments are handled exactly in the extension field
    a + b*sqrt(2); the residual sqrt(2) always cancels, so both returned
    values are real Gaussian rationals.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x0 = Fraction(x0)
    y0 = Fraction(y0)
    hs = _hermite_upto(n)
    lhs = hs[n].evaluate(GaussRational(x0 + y0))

    total = _Root2()
    for k in range(n + 1):
        hk = _eval_root2(hs[k], _Root2(Fraction(0), x0))
        hnk = _eval_root2(hs[n - k], _Root2(Fraction(0), y0))
        total = total + (hk * hnk).scaled(Fraction(math.comb(n, k)))
    if n % 2 == 0:
        pref = _Root2(Fraction(1, 2 ** (n // 2)), Fraction(0))
    else:
        pref = _Root2(Fraction(0), Fraction(1, 2 ** ((n + 1) // 2)))
    rhs = pref * total
    if rhs.b:
        raise RuntimeError(f"sqrt(2) failed to cancel in the addition formula at n={n}")
    return lhs, GaussRational(rhs.a)


def hermite_genfun_partial(gen_alpha: complex, x0: complex, n_terms: int) -> complex:
    """Partial sum sum_{n<=N} H_n(x) gen_alpha^n / n! (compare e^(-a^2+2ax))."""
    if n_terms < 0:
        raise ValueError("n_terms must be >= 0")
    hs = _hermite_upto(n_terms)
    a = complex(gen_alpha)
    acc = 0j
    weight = 1.0 + 0j  # a^n / n!
    for n in range(n_terms + 1):
        acc += weight * hs[n].evaluate(complex(x0))
        weight *= a / (n + 1)
    return acc


def even_hermite_partial(t: complex, x0: complex, n_terms: int) -> complex:
    """Partial sum sum_{n<=N} t^n/n! H_{2n}(x); meaningful for |t| < 1/4."""
    if n_terms < 0:
        raise ValueError("n_terms must be >= 0")
    hs = _hermite_upto(2 * n_terms)
    tt = complex(t)
    acc = 0j
    weight = 1.0 + 0j
    for n in range(n_terms + 1):
        acc += weight * hs[2 * n].evaluate(complex(x0))
        weight *= tt / (n + 1)
    return acc


def even_hermite_closed(t: complex, x0: complex) -> complex:
    """Closed form (4t+1)^(-1/2) exp(4t x^2 / (4t+1)) of the even-index sum."""
    w = 4 * complex(t) + 1
    if w.imag == 0.0 and w.real <= 0.0:
        raise SingularityError(f"closed form is singular on 4t+1 <= 0 (got 4t+1 = {w.real})")
    x = complex(x0)
    return cmath.exp(4 * complex(t) * x * x / w) / cmath.sqrt(w)


# --------------------------------------------------------- psi functions

def _psi_norm(n: int) -> float:
    # pi^(-1/4) / sqrt(2^n n!), computed in log space to stay finite
    return math.exp(-0.25 * math.log(math.pi) - 0.5 * (n * math.log(2.0) + math.lgamma(n + 1)))


def psi_eval(n: int, x0: complex) -> complex:
    """Normalized oscillator function pi^(-1/4) (2^n n!)^(-1/2) e^(-x^2/2) H_n(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = complex(x0)
    h = _hermite_upto(n)[n]
    return _psi_norm(n) * cmath.exp(-x * x / 2) * h.evaluate(x)


def psi_derivative(n: int, x0: complex) -> complex:
    """Analytic derivative via H_n' = 2n H_{n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = complex(x0)
    hs = _hermite_upto(n)
    hn = hs[n].evaluate(x)
    hprev = hs[n - 1].evaluate(x) if n >= 1 else 0j
    return _psi_norm(n) * cmath.exp(-x * x / 2) * (2 * n * hprev - x * hn)


def hermite_expand(
    f: Callable[[float], complex], n_max: int, half_width: float = 10.0, nodes: int = 400
) -> Sequence[complex]:
    """Coefficients c_n = integral f(x) psi_n(x) dx on [-L, L] by the trapezoid rule.

    The integrands decay like a Gaussian, so truncation at L = 10 and an
    even moderate node count are already far below the float noise floor.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if half_width <= 0:
        raise ValueError("half_width must be positive")
    if nodes < 2:
        raise ValueError("at least 2 quadrature nodes are required")
    hs = _hermite_upto(n_max)
    norms = [_psi_norm(n) for n in range(n_max + 1)]
    h = 2.0 * half_width / (nodes - 1)
    coeffs = [0j] * (n_max + 1)
    for i in range(nodes):
        x = -half_width + i * h
        w = h * (0.5 if i in (0, nodes - 1) else 1.0)
        fx = complex(f(x))
        if fx == 0:
            continue
        gauss = math.exp(-x * x / 2)
        for n in range(n_max + 1):
            coeffs[n] += w * fx * (norms[n] * gauss * hs[n].evaluate(complex(x)))
    return coeffs


# --------------------------------------------------------------- Laguerre

def laguerre_recurrence(n_max: int, order_alpha) -> LaguerreSet:
    """(n+1) L_{n+1} = (2n+a+1-x) L_n - (n+a) L_{n-1}, seeds 1 and 1+a-x."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    a = Fraction(order_alpha)
    polys = [UniPoly.one()]
    if n_max >= 1:
        polys.append(UniPoly({0: 1 + a, 1: -1}))
    for n in range(1, n_max):
        lin = UniPoly({0: 2 * n + a + 1, 1: -1})
        nxt = (lin * polys[n] - polys[n - 1] * (n + a)) * Fraction(1, n + 1)
        polys.append(nxt)
    return LaguerreSet(a, tuple(polys))


def laguerre_operator(n: int, order_alpha) -> UniPoly:
    """Operator route: (1/n!) x^(-a) (d/dx - 1)^n x^(n+a) with an exact offset."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = Fraction(order_alpha)
    s = ShiftedPoly(a, {n: 1})
    for _ in range(n):
        s = shifted_derivative(s) - s
    return s.without_offset() * Fraction(1, math.factorial(n))


def laguerre_explicit(n: int, order_alpha) -> UniPoly:
    """Explicit sum sum_k C(n+a, n-k) (-1)^k x^k / k!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = Fraction(order_alpha)
    coeffs = {}
    for k in range(n + 1):
        c = binom_shifted(a, n, k) * Fraction((-1) ** k, math.factorial(k))
        coeffs[k] = c
    return UniPoly(coeffs)


def laguerre_genfun_partial(t: complex, x0: complex, order_alpha, n_terms: int) -> complex:
    """Partial sum sum_{n<=N} L_n^a(x) t^n (compare (1-t)^-(a+1) e^(-xt/(1-t)))."""
    if n_terms < 0:
        raise ValueError("n_terms must be >= 0")
    tt = complex(t)
    if abs(tt) >= 1:
        raise DomainError(f"generating function requires |t| < 1, got |t| = {abs(tt)}")
    ls = laguerre_recurrence(n_terms, order_alpha)
    x = complex(x0)
    acc = 0j
    tp = 1.0 + 0j
    for n in range(n_terms + 1):
        acc += tp * ls[n].evaluate(x)
        tp *= tt
    return acc
