"""Scalar special functions: exact Bernoulli numbers and zeta values at integers,
plus double-precision Hurwitz zeta, Gamma, normalized incomplete Gamma and a few
named constants.

Convention: ``bernoulli(1) == -1/2`` everywhere.  Formulas that care about the
sign of B_1 go through :func:`zeta_int`, which hardcodes zeta(0) = -1/2.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PoleError, ResourceLimitError

BERNOULLI_CAP = 200

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2), 0 <= n <= 200."""
    if n < 0:
        raise DomainError(f"Bernoulli index must be nonnegative, got {n}")
    if n > BERNOULLI_CAP:
        raise ResourceLimitError(f"Bernoulli index {n} exceeds cap {BERNOULLI_CAP}")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _bernoulli_lock:
        # sum_{j=0}^{m} C(m+1, j) B_j = 0
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            if m >= 3 and m % 2 == 1:
                _bernoulli_cache.append(Fraction(0))
                continue
            acc = sum(math.comb(m + 1, j) * _bernoulli_cache[j] for j in range(m))
            _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


@dataclass(frozen=True)
class ZetaValue:
    """zeta(s) at an integer s.

    ``rational`` and ``pi_power`` are set whenever the value is known exactly as
    ``rational * pi**pi_power``; odd s >= 3 only carry the float ``value``.
    """

    s: int
    value: float
    rational: Fraction | None = None
    pi_power: int = 0

    @property
    def exact(self) -> bool:
        return self.rational is not None

    def __float__(self) -> float:
        return self.value


@lru_cache(maxsize=None)
def zeta_int(s: int) -> ZetaValue:
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s == 0:
        return ZetaValue(0, -0.5, Fraction(-1, 2), 0)
    if s < 0:
        n = -s
        r = -bernoulli(n + 1) / (n + 1)
        return ZetaValue(s, float(r), r, 0)
    if s % 2 == 0:
        m = s // 2
        r = (-1) ** (m + 1) * bernoulli(s) * Fraction(2**s, 2 * math.factorial(s))
        return ZetaValue(s, float(r) * math.pi**s, r, s)
    return ZetaValue(s, hurwitz_zeta(s, 1.0).real)


def zeta_float(s: int) -> float:
    return zeta_int(s).value


def _pochhammer(s: complex | float, m: int) -> complex | float:
    out = 1
    for i in range(m):
        out *= s + i
    return out


_EM_TERMS = 10


def _em_tail(s: int, W: complex) -> complex:
    """Euler-Maclaurin approximation of sum_{n>=0} (W+n)^{-s} for large |W|."""
    tail = W ** (1 - s) / (s - 1) + 0.5 * W ** (-s)
    poch = s  # (s)_{2j-1}, starting at j = 1
    for j in range(1, _EM_TERMS + 1):
        tail += float(bernoulli(2 * j) / math.factorial(2 * j)) * poch * W ** (-s - 2 * j + 1)
        poch *= (s + 2 * j - 1) * (s + 2 * j)
    return tail


def _em_first_dropped(s: int, W: complex) -> float:
    j = _EM_TERMS + 1
    coef = abs(float(bernoulli(2 * j) / math.factorial(2 * j)))
    return coef * abs(_pochhammer(s, 2 * j - 1)) * abs(W) ** (-s - 2 * j + 1)


def _csum(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def hurwitz_zeta(s: int, w: complex) -> complex:
    """sum_{n>=0} (w+n)^{-s} for integer s >= 2 and Re(w) > 0.

    The first K terms are summed directly, the rest by Euler-Maclaurin with K
    chosen so the first omitted correction is below 1e-14.
    """
    if int(s) != s or s < 2:
        raise DomainError(f"hurwitz_zeta needs an integer s >= 2, got {s}")
    s = int(s)
    w = complex(w)
    if w.real <= 0:
        raise DomainError(f"hurwitz_zeta needs Re(w) > 0, got {w}")
    K = 0
    while _em_first_dropped(s, w + K) >= 1e-14 or abs(w + K) < 2 * s:
        K += 1
    head = _csum((w + n) ** (-s) for n in range(K))
    return head + _em_tail(s, w + K)


def gamma_real(x: float) -> float:
    """Gamma(x) for 0 < x <= 100 (relative error ~1e-15 via the C library)."""
    if not 0 < x <= 100:
        raise DomainError(f"gamma_real needs 0 < x <= 100, got {x}")
    return math.gamma(x)


def incomplete_gamma_poly(n: int, x: float) -> float:
    """sum_{j<n} x^j / j!, so that Gamma*(n, x) = exp(-x) * incomplete_gamma_poly(n, x)."""
    term, acc = 1.0, 0.0
    for j in range(n):
        if j:
            term *= x / j
        acc += term
    return acc


def incomplete_gamma_star(n: int, x: float) -> float:
    """Normalized upper incomplete Gamma Gamma(n, x)/Gamma(n) for integer n >= 1."""
    if n < 1:
        raise DomainError(f"incomplete_gamma_star needs n >= 1, got {n}")
    if x < 0:
        raise DomainError(f"incomplete_gamma_star needs x >= 0, got {x}")
    if x >= n:
        return math.exp(-x) * incomplete_gamma_poly(n, x)
    # below the bulk, 1 - e^{-x} sum_{j>=n} x^j/j! avoids rounding above 1
    term = math.exp(-x - math.lgamma(n + 1) + n * math.log(x)) if x > 0 else 0.0
    lower = 0.0
    j = n
    while term > 1e-18 * max(lower, 1e-300):
        lower += term
        j += 1
        term *= x / j
    return 1.0 - lower


@lru_cache(maxsize=None)
def euler_gamma() -> float:
    N = 20
    harmonic = math.fsum(1.0 / n for n in range(1, N + 1))
    corr = math.fsum(float(bernoulli(2 * j)) / (2 * j * N ** (2 * j)) for j in range(1, 8))
    return harmonic - math.log(N) - 1.0 / (2 * N) + corr


@lru_cache(maxsize=None)
def zeta_prime_2() -> float:
    """zeta'(2) = -sum log(n)/n^2, head summed directly, tail by differentiated Euler-Maclaurin."""
    s, N = 2.0, 20
    head = -math.fsum(math.log(n) * n ** (-s) for n in range(2, N))
    L = math.log(N)
    # d/ds of  N^{1-s}/(s-1) + N^{-s}/2 + sum_j c_j (s)_{2j-1} N^{-s-2j+1}
    parts = [
        -L * N ** (1 - s) / (s - 1) - N ** (1 - s) / (s - 1) ** 2,
        -L * N ** (-s) / 2,
    ]
    for j in range(1, 9):
        c = float(bernoulli(2 * j)) / math.factorial(2 * j)
        m = 2 * j - 1
        poch = _pochhammer(s, m)
        dpoch = poch * sum(1.0 / (s + i) for i in range(m))
        parts.append(c * N ** (-s - m) * (dpoch - L * poch))
    return head + math.fsum(parts)


def named_constants() -> dict[str, float]:
    return {
        "euler_gamma": euler_gamma(),
        "zeta_prime_2": zeta_prime_2(),
        "log2": math.log(2.0),
        "pi": math.pi,
    }
