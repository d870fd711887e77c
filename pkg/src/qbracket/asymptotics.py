"""G-hat_k(t) = sum sigma_{k-1}(n) e^{-nt} and its divergent small-t expansion."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, TruncationError
from .special import bernoulli, euler_gamma, gamma_real, zeta_int

T_MIN = 0.01
TERM_CAP = 80
# the published table is reproduced by a fixed cut after the n = 25 term
TABLE_CUTOFF = 25


def _check_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise DomainError(f"k must be an odd integer >= 3, got {k}")


def _check_t(t: float) -> None:
    if not t >= T_MIN:
        raise TruncationError(f"t = {t} is below {T_MIN}; the sums converge too slowly")


def _lambert_real(p: int, t: float) -> float:
    """sum_{n>=1} n^p / (e^{nt} - 1)."""
    r = math.exp(-t)
    terms = []
    for n in range(1, 10_000_000):
        terms.append(n**p / math.expm1(n * t))
        rho = r * ((n + 2) / (n + 1)) ** max(p, 0)
        if rho < 1:
            bound = (n + 1) ** p * r ** (n + 1) / ((1 - rho) * (1 - r))
            if bound < 1e-17 * max(1.0, terms[0]):
                return math.fsum(terms)
    raise TruncationError("Lambert sum did not converge")


def g_hat(k: int, t: float) -> float:
    _check_k(k)
    _check_t(t)
    return _lambert_real(k - 1, t)


@lru_cache(maxsize=None)
def residue_coeff(k: int, n: int) -> Fraction:
    """((-1)^n / n!) zeta(-n) zeta(1-n-k), the coefficient of t^n."""
    z1 = zeta_int(-n).rational
    z2 = zeta_int(1 - n - k).rational
    return Fraction((-1) ** n, math.factorial(n)) * z1 * z2


def bernoulli_form_coeff(k: int, n: int) -> Fraction:
    """(B_{n+1}/(n+1)) (B_{n+k}/(n+k)) (-1)^n / n!, with B_1 = +1/2 at n = 0."""
    b1 = Fraction(1, 2) if n == 0 else bernoulli(n + 1)
    return b1 / (n + 1) * bernoulli(n + k) / (n + k) * Fraction((-1) ** n, math.factorial(n))


def head_terms(k: int, t: float) -> float:
    return gamma_real(k) * zeta_int(k).value / t**k + zeta_int(2 - k).value / t


@dataclass(frozen=True)
class AsymptoticResult:
    t: float
    g_hat: float
    g_tilde: float
    ratio: float
    truncation_index: int
    smallest_term: float


def _series_terms(k: int, t: float, upto: int) -> list[float]:
    return [float(residue_coeff(k, n)) * t**n for n in range(upto + 1)]


def g_tilde_value(k: int, t: float, n_max: int | None = None) -> tuple[float, int, float]:
    """(value, truncation index, smallest nonzero |term| up to the cut)."""
    _check_k(k)
    _check_t(t)
    terms = _series_terms(k, t, TERM_CAP if n_max is None else n_max)
    nonzero = [(abs(x), n) for n, x in enumerate(terms) if x != 0]
    smallest, argmin = min(nonzero)
    cut = argmin if n_max is None else n_max
    return head_terms(k, t) + math.fsum(terms[: cut + 1]), cut, smallest


def g_tilde(k: int, t: float, n_max: int | None = None) -> AsymptoticResult:
    """Optimal truncation by default; pass ``n_max`` for a fixed cut."""
    value, cut, smallest = g_tilde_value(k, t, n_max)
    gh = g_hat(k, t)
    return AsymptoticResult(t, gh, value, gh / value, cut, smallest)


def asymptotic_table(k: int, ts, n_max: int | None = TABLE_CUTOFF) -> list[AsymptoticResult]:
    return [g_tilde(k, float(t), n_max) for t in ts]


CSV_HEADER = ["t", "g_hat", "g_tilde", "ratio", "trunc_index"]


def table_csv(rows: list[AsymptoticResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([f"{r.t:g}", f"{r.g_hat:.10f}", f"{r.g_tilde:.10f}", f"{r.ratio:.10f}", r.truncation_index])
    return buf.getvalue()


def table_json(rows: list[AsymptoticResult]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2)


def table_text(rows: list[AsymptoticResult]) -> str:
    lines = [f"{'t':>6}  {'g_hat':>18}  {'g_tilde':>18}  {'ratio':>13}  trunc"]
    for r in rows:
        lines.append(f"{r.t:>6g}  {r.g_hat:>18.10f}  {r.g_tilde:>18.10f}  {r.ratio:>13.10f}  {r.truncation_index}")
    return "\n".join(lines) + "\n"


def _divisor_tail_series(t: float) -> float:
    """sum_n B_{n+1}^2/(n+1)^2 (-t)^n/n! with B_1 = +1/2, optimally truncated."""
    terms = []
    for n in range(TERM_CAP + 1):
        b = Fraction(1, 2) if n == 0 else bernoulli(n + 1)
        terms.append(float(b * b / (n + 1) ** 2 / math.factorial(n)) * (-t) ** n)
    nonzero = [(abs(x), n) for n, x in enumerate(terms) if x != 0]
    _, cut = min(nonzero)
    return math.fsum(terms[: cut + 1])


def a1_expansion(t: float) -> dict:
    """The weight-1 case: stated expansion, direct divisor sum and the classical
    (gamma - log t)/t expansion, side by side.  Nothing is asserted."""
    if not 0.05 <= t <= 1:
        raise DomainError(f"t must lie in [0.05, 1], got {t}")
    series = _divisor_tail_series(t)
    g = euler_gamma()
    stated_value = 2 * g / t + series
    classical = (g - math.log(t)) / t + series
    oracle = _lambert_real(0, t)
    return {
        "t": t,
        "stated_value": stated_value,
        "oracle_value": oracle,
        "classical_value": classical,
        "discrepancy": stated_value - oracle,
        "classical_discrepancy": classical - oracle,
    }
