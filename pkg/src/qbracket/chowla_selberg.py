"""Fundamental discriminants, Kronecker characters, class numbers and the
Gamma-product period attached to an imaginary quadratic field."""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .modular import h_star_value, psi_value

CLASS_NUMBER_BOUND = 10**6
OMEGA_BOUND = 400


def _squarefree(m: int) -> bool:
    m = abs(m)
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def is_fundamental(D: int) -> bool:
    if D >= 0:
        raise DomainError(f"expected a negative discriminant, got {D}")
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _require_fundamental(D: int) -> None:
    if not is_fundamental(D):
        raise DomainError(f"{D} is not a fundamental discriminant")


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise DomainError("Jacobi symbol needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n) if n > 1 else result


def kronecker_chi(D: int, j: int) -> int:
    _require_fundamental(D)
    return kronecker(D, j)


def class_number(D: int) -> int:
    """Number of reduced primitive forms of discriminant D."""
    _require_fundamental(D)
    if -D > CLASS_NUMBER_BOUND:
        raise ResourceLimitError(f"|D| = {-D} exceeds {CLASS_NUMBER_BOUND}")
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                h += 1
        a += 1
    return h


def h_prime(D: int) -> Fraction:
    if D == -3:
        return Fraction(1, 3)
    if D == -4:
        return Fraction(1, 2)
    return Fraction(class_number(D))


def omega_period(D: int) -> float:
    """(2 pi |D|)^(-1/2) (prod_j Gamma(j/|D|)^chi(j))^(1/(2 h'))."""
    _require_fundamental(D)
    N = -D
    if N > OMEGA_BOUND:
        raise ResourceLimitError(f"|D| = {N} exceeds {OMEGA_BOUND}")
    log_prod = math.fsum(kronecker(D, j) * math.lgamma(j / N) for j in range(1, N))
    return math.exp(log_prod / (2 * float(h_prime(D)))) / math.sqrt(2 * math.pi * N)


@dataclass(frozen=True)
class DiscriminantData:
    D: int
    class_number: int
    h_prime: Fraction
    chi: tuple[int, ...]
    omega: float


def discriminant_data(D: int) -> DiscriminantData:
    _require_fundamental(D)
    chi = tuple(kronecker(D, j) for j in range(1, -D + 1))
    return DiscriminantData(D, class_number(D), h_prime(D), chi, omega_period(D))


def cm_relation(tau: complex, D: int, max_leading: int = 1000, tol: float = 1e-9) -> tuple[int, int, int] | None:
    """Integers (A, B, C) with A tau^2 + B tau + C = 0 and B^2 - 4AC = D f^2, if any small ones exist."""
    x, y = tau.real, tau.imag
    for A in range(1, max_leading + 1):
        B = round(-2 * A * x)
        if abs(B + 2 * A * x) > tol * A:
            continue
        f2 = 4 * A * A * y * y / -D
        f = round(math.sqrt(f2))
        if f == 0 or abs(f * f - f2) > tol * max(1.0, f2):
            continue
        num = B * B - D * f * f
        if num % (4 * A):
            continue
        return A, B, num // (4 * A)
    return None


def default_candidates() -> dict[str, float]:
    return {f"2^({j}/8)": 2.0 ** (j / 8) for j in range(-8, 9)}


def corollary5_check(k: int, tau, D: int, candidates: dict[str, complex] | None = None, tol: float = 1e-8) -> dict:
    _require_fundamental(D)
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError("tau must lie in the upper half plane")
    if cm_relation(tau, D) is None:
        raise DomainError(f"tau = {tau} does not satisfy an integral quadratic of discriminant {D} times a square")
    lhs = h_star_value(k, -1 / tau) - h_star_value(k, tau) / (tau ** (2 * k) * cmath.sqrt(-1j * tau))
    omega = omega_period(D)
    r = lhs / (psi_value(k, tau) / math.sqrt(omega))
    cands = default_candidates() if candidates is None else candidates
    best = min(cands.items(), key=lambda kv: abs(r - kv[1]))
    distance = abs(r - best[1])
    return {
        "D": D,
        "h": class_number(D),
        "h_prime": f"{h_prime(D).numerator}/{h_prime(D).denominator}",
        "omega": omega,
        "ratio": r,
        "matched": best[0] if distance < tol else None,
        "distance": distance,
    }


def corollary5_json(result: dict) -> str:
    doc = dict(result)
    r = complex(doc["ratio"])
    doc["ratio"] = {"re": r.real, "im": r.imag}
    return json.dumps(doc, indent=2)
