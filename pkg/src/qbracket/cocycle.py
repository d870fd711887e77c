"""The S-cocycle of E_k (k = 2 - a odd >= 3) in three independent forms.

    eichler difference   E_k(z) - z^(-k) E_k(-1/z)
    lattice double sum   c_k^(-1) * 2 sum'_{m,n>=0} (mz+n)^(-k)
    Mellin contour       (1/2pi) int_{Re s = k/2} G(s) z^(-s) ds + c_k^(-1) zeta(k)(1 + z^(-k))

with c_k = (-2 pi i)^k/(k-1)! and G(s) = Gamma(s) zeta(s) zeta(s-k+1)/((2pi)^s sin(pi s/2)).
The ``*_raw`` variants return the bare sum and bare integral.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from .errors import DomainError, TruncationError
from .modular import eichler_value
from .special import _csum, bernoulli, hurwitz_zeta, zeta_float


def _weight(a: int) -> int:
    if a > -1 or a % 2 == 0:
        raise DomainError(f"a must be an odd integer <= -1, got {a}")
    return 2 - a


def _check_cut_plane(z: complex) -> complex:
    z = complex(z)
    if z.imag == 0 and z.real <= 0:
        raise DomainError(f"z = {z} lies on the cut (-inf, 0]")
    return z


def normalization(k: int) -> complex:
    return (-2j * math.pi) ** k / math.factorial(k - 1)


def eichler_difference(a: int, z) -> complex:
    k = _weight(a)
    z = complex(z)
    return eichler_value(a, z) - z ** (-k) * eichler_value(a, -1 / z)


def _hurwitz_any(k: int, w: complex) -> complex:
    """zeta(k, w) for w off (-inf, 0]; shifts into Re w > 0 by direct terms."""
    K = 0 if w.real > 0 else math.floor(-w.real) + 1
    head = _csum((w + n) ** (-k) for n in range(K))
    return head + hurwitz_zeta(k, w + K)


def _outer_tail(k: int, z: complex, M: int, terms: int = 6) -> complex:
    """sum_{m>M} zeta(k, mz) from the Euler-Maclaurin expansion of zeta(k, w) in w = mz."""
    tail = z ** (1 - k) / (k - 1) * hurwitz_zeta(k - 1, M + 1) + 0.5 * z ** (-k) * hurwitz_zeta(k, M + 1)
    poch = k
    for j in range(1, terms + 1):
        p = k + 2 * j - 1
        c = float(bernoulli(2 * j)) / math.factorial(2 * j)
        tail += c * poch * z ** (-p) * hurwitz_zeta(p, M + 1)
        poch *= (k + 2 * j - 1) * (k + 2 * j)
    return tail


def cocycle_double_sum_raw(a: int, z, M: int = 200) -> complex:
    """2 sum'_{m,n>=0} (mz+n)^(-k); the m = 0 or n = 0 rows carry weight 1/2."""
    k = _weight(a)
    z = _check_cut_plane(z)
    zk = zeta_float(k)
    # sum' = zeta(k)/2 - z^{-k} zeta(k)/2 + sum_{m>=1} zeta(k, mz)
    body = _csum(_hurwitz_any(k, m * z) for m in range(1, M + 1))
    total = 0.5 * zk - 0.5 * z ** (-k) * zk + body + _outer_tail(k, z, M)
    return 2 * total


def cocycle_double_sum(a: int, z, M: int = 200) -> complex:
    k = _weight(a)
    return cocycle_double_sum_raw(a, z, M) / normalization(k)


def _mellin_kernel(k: int, s, logz):
    return (
        mpmath.gamma(s) * mpmath.zeta(s) * mpmath.zeta(s - k + 1)
        / ((2 * mpmath.pi) ** s * mpmath.sin(mpmath.pi * s / 2))
        * mpmath.exp(-s * logz)
    )


def cocycle_contour_raw(a: int, z, tol: float = 1e-13) -> complex:
    """(1/2pi) int over Re s = k/2 of G(s) z^(-s) ds, with ds = i du, by the trapezoid rule."""
    k = _weight(a)
    z = _check_cut_plane(z)
    logz = cmath.log(z)
    if abs(logz.imag) > math.pi - 0.2:
        raise DomainError(f"Arg z = {logz.imag:.3f} too close to the cut; the integral converges too slowly")
    c = k / 2
    cache: dict[float, complex] = {}

    def f(u: float) -> complex:
        if u not in cache:
            cache[u] = complex(_mellin_kernel(k, mpmath.mpc(c, u), mpmath.mpc(logz.real, logz.imag)))
        return cache[u]

    # half-width where the integrand is negligible; decay ~ exp(-(pi - |Arg z|) |u|)
    U = 4.0
    peak = abs(f(0.0))
    while max(abs(f(U)), abs(f(-U))) > tol * max(peak, 1.0) * 1e-2:
        U *= 1.25
        if U > 2000:
            raise TruncationError("contour integrand decays too slowly")

    def trapezoid(h: float) -> complex:
        n = int(math.ceil(U / h))
        return h * _csum(f(j * h) for j in range(-n, n + 1))

    h = 0.5
    prev = trapezoid(h)
    while True:
        h /= 2
        cur = trapezoid(h)
        if abs(cur - prev) < tol:
            return 1j * cur / (2 * math.pi)
        if h < 1e-3:
            raise TruncationError("contour quadrature did not settle")
        prev = cur


def cocycle_contour(a: int, z, tol: float = 1e-13) -> complex:
    k = _weight(a)
    z = _check_cut_plane(z)
    residue = zeta_float(k) * (1 + z ** (-k)) / normalization(k)
    return cocycle_contour_raw(a, z, tol) + residue
