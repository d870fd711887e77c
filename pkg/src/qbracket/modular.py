"""Floating-point evaluation on the upper half plane.

Branch conventions, all principal: q^offset = exp(2 pi i offset z), z^(-s) =
exp(-s Log z), sqrt(-iz) via cmath.sqrt (positive at z = i).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PoleError, TruncationError
from .series import TruncatedQSeries
from .special import (
    bernoulli,
    euler_gamma,
    incomplete_gamma_poly,
    zeta_float,
    zeta_prime_2,
)

Y_FLOOR = 0.05
TWO_PI = 2 * math.pi
_MAX_TERMS = 200_000


@dataclass(frozen=True)
class UpperHalfPoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError(f"point must lie in the upper half plane, got y={self.y}")

    @classmethod
    def of(cls, z) -> UpperHalfPoint:
        if isinstance(z, UpperHalfPoint):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.z)

    def __complex__(self) -> complex:
        return self.z


def _point(z, y_floor: float = Y_FLOOR) -> complex:
    p = UpperHalfPoint.of(z)
    if p.y < y_floor:
        raise DomainError(f"Im z = {p.y} is below the floor {y_floor}")
    return p.z


def _tail_bound(p: float, r: float, N: int) -> float:
    """Bound for sum_{n>N} n^p r^n, with r < 1."""
    rho = r * ((N + 2) / (N + 1)) ** max(p, 0.0)
    if rho >= 1:
        return math.inf
    return (N + 1) ** p * r ** (N + 1) / (1 - rho)


def eval_truncated(series: TruncatedQSeries, z, eps: float = 1e-12, y_floor: float = Y_FLOOR) -> complex:
    """Sum c_n q^(n+offset), stopping once a cubic-growth tail model drops below eps."""
    if eps <= 0:
        raise DomainError("eps must be positive")
    z = _point(z, y_floor)
    r = math.exp(-TWO_PI * z.imag)
    coeffs = [float(c) for c in series.coeffs]
    C = max(abs(c) / (n + 1) ** 3 for n, c in enumerate(coeffs))
    stop = None
    for N in range(len(coeffs)):
        if C * 8 * _tail_bound(3, r, N) < eps:
            stop = N
            break
    if stop is None:
        raise TruncationError(f"order {series.order} too small for eps={eps} at Im z={z.imag}")
    terms = [coeffs[n] * cmath.exp(2j * math.pi * n * z) for n in range(stop + 1)]
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return cmath.exp(2j * math.pi * float(series.offset) * z) * total


def lambert_sum(p: float, q: complex, eps: float = 1e-17) -> complex:
    """sum_{n>=1} n^p q^n/(1-q^n) for |q| < 1, with a geometric tail bound."""
    r = abs(q)
    if not r < 1:
        raise DomainError("|q| must be below 1")
    logq = cmath.log(q)
    re, im = [], []
    scale = 0.0
    for n in range(1, _MAX_TERMS):
        qn = cmath.exp(n * logq)
        term = n**p * qn / (1 - qn)
        re.append(term.real)
        im.append(term.imag)
        scale = max(scale, abs(term))
        if _tail_bound(p, r, n) / (1 - r) < eps * max(1.0, scale):
            return complex(math.fsum(re), math.fsum(im))
    raise TruncationError("Lambert series did not converge")


def eichler_value(a: int, z, y_floor: float = Y_FLOOR) -> complex:
    """E_{2-a}(z) = sum n^(1-a) q^n/(1-q^n)."""
    z = _point(z, y_floor)
    return lambert_sum(1 - a, cmath.exp(2j * math.pi * z))


def eta_value(z, y_floor: float = Y_FLOOR) -> complex:
    z = _point(z, y_floor)
    q = cmath.exp(2j * math.pi * z)
    r = abs(q)
    prod = 1 + 0j
    n = 1
    while True:
        prod *= 1 - cmath.exp(2j * math.pi * n * z)
        if r ** (n + 1) / (1 - r) < 1e-17:
            break
        n += 1
    return cmath.exp(2j * math.pi * z / 24) * prod


# -- period polynomial and the functions built on it --


@lru_cache(maxsize=None)
def period_poly_coeffs(k: int) -> dict[int, Fraction]:
    """Rational b_m with P_{-2k}(z) = -(1/2)(2 pi i)^(2k+1) sum_m b_m z^(2m-1)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    out = {}
    for m in range(k + 2):
        b = bernoulli(2 * m) / math.factorial(2 * m) * bernoulli(2 * k + 2 - 2 * m) / math.factorial(2 * k + 2 - 2 * m)
        out[2 * m - 1] = b
    return out


def _period_prefactor(k: int) -> complex:
    return -0.5 * (2j * math.pi) ** (2 * k + 1)


def P_poly(k: int, z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise PoleError("the period polynomial has a pole at z = 0")
    s = sum(float(b) * z**e for e, b in period_poly_coeffs(k).items())
    return _period_prefactor(k) * s


def M_value(k: int, t: int, z, period_sign: int = -1, y_floor: float = Y_FLOOR) -> complex:
    """E_{-2k}(tz) + (period_sign/2) P_{-2k}(tz) + zeta(2k+1)/2.

    The default sign -1 is the defining formula as usually written; with +1 the
    function is exactly invariant under z -> -1/(t^2 z) in weight -2k.
    """
    if period_sign not in (-1, 1):
        raise DomainError("period_sign must be +1 or -1")
    z = _point(z, y_floor)
    tz = t * z
    return eichler_value(2 * k + 2, tz, y_floor) + period_sign * 0.5 * P_poly(k, tz) + 0.5 * zeta_float(2 * k + 1)


def theorem3_shift_rhs(k: int, t: int, z: complex, include_m0: bool = False) -> complex:
    """(1/4)(2 pi i)^(2k+1) sum_m sum_{r=1}^{2m-1} b_m t^(2m-1) C(2m-1, r) z^(2m-1-r).

    ``include_m0`` adds the m = 0 contribution b_0 t^(-1) (1/(z+1) - 1/z), which the
    binomial inner sum cannot express.
    """
    z = complex(z)
    acc = {}
    for e, b in period_poly_coeffs(k).items():
        m2 = e  # 2m - 1
        if m2 < 1:
            continue
        for r in range(1, m2 + 1):
            acc[m2 - r] = acc.get(m2 - r, Fraction(0)) + b * Fraction(t) ** m2 * math.comb(m2, r)
    val = sum(float(c) * z**p for p, c in acc.items())
    if include_m0:
        b0 = period_poly_coeffs(k)[-1]
        val += float(b0) / t * (1 / (z + 1) - 1 / z)
    return 0.25 * (2j * math.pi) ** (2 * k + 1) * val


def M_shift_defect(k: int, t: int, z, period_sign: int = -1) -> complex:
    """M(z+1) - M(z) in closed form: (period_sign/2)(P(tz+t) - P(tz))."""
    z = complex(z)
    return period_sign * 0.5 * (P_poly(k, t * z + t) - P_poly(k, t * z))


def psi_value(k: int, z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise PoleError("Psi has a pole at z = 0")
    return -P_poly(k, -1 / z) - 0.5 * (1 - z ** (-2 * k)) * zeta_float(2 * k + 1)


def berndt_rhs(k: int, z: complex) -> complex:
    """-(1/2)(1 - z^2k) zeta(2k+1) - P_{-2k}(z)."""
    z = complex(z)
    return -0.5 * (1 - z ** (2 * k)) * zeta_float(2 * k + 1) - P_poly(k, z)


def h_star_value(k: int, z, y_floor: float = Y_FLOOR) -> complex:
    """q^(-1/24) H_{2k+2,1}(z) = E_{-2k}(z)/eta(z)."""
    return eichler_value(2 * k + 2, z, y_floor) / eta_value(z, y_floor)


# -- real-analytic Eisenstein-type expansions --


def maass_E0_complex(t: int, z, y_floor: float = Y_FLOOR) -> complex:
    """The weight 0 expansion at tz, before discarding the (tiny) imaginary part."""
    z = _point(z, y_floor)
    ty = t * z.imag
    const = euler_gamma() - math.log(2) - math.log(ty) / 2 - 6 * zeta_prime_2() / math.pi**2
    holo = eichler_value(2, t * z, y_floor)
    # q-bar sum, evaluated on its own rather than as conj(holo)
    qbar = cmath.exp(-2j * math.pi * t * z.conjugate())
    anti = lambert_sum(-1, qbar)
    return ty + 6 / math.pi * (const + holo + anti)


def maass_E0(t: int, z, y_floor: float = Y_FLOOR) -> float:
    return maass_E0_complex(t, z, y_floor).real


def _sigma_float(ell: int, n: int) -> float:
    total = 0.0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += float(d) ** ell
            if d * d != n:
                total += float(n // d) ** ell
        d += 1
    return total


def nonholomorphic_part(k: int, t: int, z, eps: float = 1e-17) -> complex:
    """sum sigma_{1-2k}(n) Gamma*(2k-1, 4 pi t n y) q^(-tn)."""
    z = complex(z)
    x, y = z.real, z.imag
    re, im = [], []
    for n in range(1, _MAX_TERMS):
        X = 4 * math.pi * t * n * y
        # Gamma*(s, X) q^(-tn) = poly(X) e^{-X} e^{2 pi t n y} e^{-2 pi i t n x}
        mag = _sigma_float(1 - 2 * k, n) * incomplete_gamma_poly(2 * k - 1, X) * math.exp(-2 * math.pi * t * n * y)
        term = mag * cmath.exp(-2j * math.pi * t * n * x)
        re.append(term.real)
        im.append(term.imag)
        if n > 2 * k and mag < eps:
            return complex(math.fsum(re), math.fsum(im))
    raise TruncationError("non-holomorphic tail did not converge")


def maass_E_neg(k: int, t: int, z, y_floor: float = Y_FLOOR) -> complex:
    """The weight 2-2k expansion at tz, k >= 2."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    z = _point(z, y_floor)
    ty = t * z.imag
    pref = 2 * math.factorial(2 * k) / (float(bernoulli(2 * k)) * (4 * math.pi) ** (2 * k - 1))
    inner = zeta_float(2 * k - 1) + eichler_value(2 * k, t * z, y_floor) + nonholomorphic_part(k, t, z)
    return ty ** (2 * k - 1) + pref * inner


def laplacian_fd(weight: int, f, z, h: float = 1e-3) -> complex:
    """-y^2 (f_xx + f_yy) + i k y (f_x + i f_y) by central differences."""
    z = complex(z)
    if z.imag - h <= 0:
        raise DomainError("finite-difference stencil leaves the upper half plane")
    y = z.imag
    f0 = f(z)
    fxp, fxm = f(z + h), f(z - h)
    fyp, fym = f(z + 1j * h), f(z - 1j * h)
    fxx = (fxp - 2 * f0 + fxm) / h**2
    fyy = (fyp - 2 * f0 + fym) / h**2
    fx = (fxp - fxm) / (2 * h)
    fy = (fyp - fym) / (2 * h)
    return -(y**2) * (fxx + fyy) + 1j * weight * y * (fx + 1j * fy)
