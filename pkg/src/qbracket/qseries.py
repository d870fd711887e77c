"""Named q-series and exact verification of the q-bracket identities."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Callable, Mapping

from .errors import DomainError
from .partitions import (
    DEFAULT_PARTITION_CAP,
    Partition,
    enumerate_partitions,
    f_hook,
    hook_count_table,
    hook_multiset,
    moment_S,
    t_hook_multiset,
)
from .poly import AlphaPolynomial, Poly, XPolynomial
from .reports import VerificationReport
from .series import TruncatedQSeries, series_exp, series_log
from .special import bernoulli

DEFAULT_ORDER = 50


def euler_series(N: int) -> TruncatedQSeries:
    """prod 1/(1-q^n) to order N, as partition counts."""
    if N < 0:
        raise DomainError(f"order must be nonnegative, got {N}")
    p = [1] + [0] * N
    for part in range(1, N + 1):
        for m in range(part, N + 1):
            p[m] += p[m - part]
    return TruncatedQSeries(p)


def euler_product_coeffs(N: int) -> list[int]:
    """Coefficients of prod (1-q^n) up to q^N."""
    c = [1] + [0] * N
    for n in range(1, N + 1):
        for m in range(N, n - 1, -1):
            c[m] -= c[m - n]
    return c


def eta_series(N: int) -> TruncatedQSeries:
    if N < 0:
        raise DomainError(f"order must be nonnegative, got {N}")
    return TruncatedQSeries(euler_product_coeffs(N), Fraction(1, 24))


def _power(d: int, ell: int) -> Fraction:
    return Fraction(d**ell) if ell >= 0 else Fraction(1, d ** (-ell))


def sigma(ell: int, n: int) -> Fraction:
    """sum of d^ell over the positive divisors d of n."""
    if n < 1:
        raise DomainError(f"sigma needs n >= 1, got {n}")
    total = Fraction(0)
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += _power(d, ell)
            if d * d != n:
                total += _power(n // d, ell)
        d += 1
    return total


def divisor_sum_series(ell: int, N: int, step: int = 1) -> TruncatedQSeries:
    """sum_n sigma_ell(n) q^(step*n), truncated at q^N."""
    c = [Fraction(0)] * (N + 1)
    for n in range(1, N // step + 1):
        c[step * n] = sigma(ell, n)
    return TruncatedQSeries(c)


def lambert_series(a: int, N: int) -> TruncatedQSeries:
    """sum_n n^(1-a) q^n/(1-q^n), each geometric tail expanded and collected."""
    c = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        w = _power(n, 1 - a)
        for m in range(n, N + 1, n):
            c[m] += w
    return TruncatedQSeries(c)


def eichler_coeffs(a: int, N: int) -> TruncatedQSeries:
    """Coefficients sigma_{1-a}(n) of the Eichler-type series, cross-checked
    against the Lambert expansion."""
    if N < 1:
        raise DomainError(f"order must be >= 1, got {N}")
    divisor_form = divisor_sum_series(1 - a, N)
    if divisor_form != lambert_series(a, N):
        raise AssertionError(f"Lambert and divisor-sum forms disagree for a={a}")
    return divisor_form


def _numerator(values, N: int, cap: int) -> list:
    num = [None] * (N + 1)
    for n in range(N + 1):
        acc = 0
        for lam in enumerate_partitions(n, cap):
            v = values(lam) if callable(values) else values[lam]
            acc = v + acc
        num[n] = acc if not isinstance(acc, int) else Fraction(acc)
    return num


def q_bracket(
    values: Callable[[Partition], object] | Mapping[Partition, object],
    N: int,
    cap: int = DEFAULT_PARTITION_CAP,
) -> TruncatedQSeries:
    """<f>_q to order N.  ``values`` is a function on partitions or a mapping
    defined on every partition of size at most N."""
    num = TruncatedQSeries(_numerator(values, N, cap))
    return num * euler_series(N).inverse()


def _compare(identity, params, N, lhs, rhs, notes=()) -> VerificationReport:
    for n in range(N + 1):
        if lhs[n] != rhs[n]:
            return VerificationReport(identity, params, N, False, (n, lhs[n], rhs[n]), list(notes))
    return VerificationReport(identity, params, N, True, None, list(notes))


def theorem1_numerator(a: int, t: int, N: int, cap: int = DEFAULT_PARTITION_CAP) -> list[Fraction]:
    """sum over |lam| = n of f_{a,t}(lam), for n <= N, from aggregated hook counts."""
    out = []
    scale = Fraction(t) ** (a - 1)
    for n in range(N + 1):
        counts = hook_count_table(n, cap)
        s = sum((c * _power(h, -a) for h, c in enumerate(counts) if c and h % t == 0), Fraction(0))
        out.append(scale * s)
    return out


def verify_theorem1(a: int, t: int, N: int = DEFAULT_ORDER, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    """<f_{a,t}>_q against sigma_{1-a}(n) placed at q^(tn)."""
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    if N < t:
        raise DomainError(f"order {N} must be at least t = {t}")
    lhs = TruncatedQSeries(theorem1_numerator(a, t, N, cap)) * euler_series(N).inverse()
    rhs = divisor_sum_series(1 - a, N, step=t)
    return _compare("theorem1", {"a": a, "t": t}, N, lhs, rhs)


# -- Han-Ji bivariate identity: coefficients are polynomials in x --


def hanji_lhs(k: int, t: int, N: int, cap: int = DEFAULT_PARTITION_CAP) -> TruncatedQSeries:
    """t^(k-1) sum_lam q^|lam| x^|H_t(lam)| sum_{h in H_t(lam)} h^(-k), per partition."""
    scale = Fraction(t) ** (k - 1)
    coeffs = []
    for n in range(N + 1):
        by_degree: dict[int, Fraction] = defaultdict(Fraction)
        for lam in enumerate_partitions(n, cap):
            hooks = t_hook_multiset(lam, t)
            s = sum((_power(h, -k) for h in hooks), Fraction(0))
            if s:
                by_degree[len(hooks)] += s
        top = max(by_degree, default=-1)
        coeffs.append(XPolynomial([scale * by_degree.get(d, 0) for d in range(top + 1)]))
    return TruncatedQSeries(coeffs)


def _times_sparse(A: list, terms: list[tuple[int, object]], N: int) -> list:
    """A * sum c q^e over the given (e, c) terms, truncated at q^N."""
    out = [A[0] * 0 for _ in range(N + 1)]
    for e, c in terms:
        for m in range(N + 1 - e):
            if A[m]:
                out[m + e] = out[m + e] + A[m] * c
    return out


def hanji_rhs(k: int, t: int, N: int) -> TruncatedQSeries:
    """prod (1-q^tn)^t / ((1-x^n q^tn)^t (1-q^n)) * sum x^n q^tn / (n^(k-1) (1-x^n q^tn))."""
    x0 = XPolynomial([1])
    # prod (1-q^{tn})^t / prod (1-q^n), rational coefficients
    base = euler_series(N)
    for n in range(1, N // t + 1):
        for _ in range(t):
            c = list(base.coeffs)
            for m in range(N, t * n - 1, -1):
                c[m] -= c[m - t * n]
            base = TruncatedQSeries(c)
    acc = [x0 * c for c in base.coeffs]
    # 1/(1 - x^n q^{tn})^t = sum_j C(j+t-1, t-1) x^{nj} q^{tnj}
    for n in range(1, N // t + 1):
        terms = [
            (t * n * j, XPolynomial([0] * (n * j) + [comb(j + t - 1, t - 1)]))
            for j in range(N // (t * n) + 1)
        ]
        acc = _times_sparse(acc, terms, N)
    lam_sum = [XPolynomial() for _ in range(N + 1)]
    for n in range(1, N // t + 1):
        w = _power(n, 1 - k)
        for j in range(1, N // (t * n) + 1):
            lam_sum[t * n * j] = lam_sum[t * n * j] + XPolynomial([0] * (n * j) + [w])
    return TruncatedQSeries(acc) * TruncatedQSeries(lam_sum)


def verify_hanji(k: int, t: int, N: int = 16, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    if not isinstance(k, int):
        raise DomainError("the exact bivariate check needs an integer exponent k")
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    if N < t:
        raise DomainError(f"order {N} must be at least t = {t}")
    lhs = hanji_lhs(k, t, N, cap)
    rhs = hanji_rhs(k, t, N)
    return _compare("hanji", {"k": k, "t": t}, N, lhs, rhs)


# -- Nekrasov-Okounkov --


def _D_from_hooks(hooks: tuple[int, ...]) -> Poly:
    out = AlphaPolynomial([1])
    for h in hooks:
        out = out * AlphaPolynomial([1, Fraction(-1, h * h)])
    return out


def _no_numerator(N: int, cap: int) -> list[Poly]:
    num = []
    for n in range(N + 1):
        # D only depends on the hook multiset, so expand once per distinct multiset
        groups: dict[tuple[int, ...], int] = defaultdict(int)
        for lam in enumerate_partitions(n, cap):
            groups[hook_multiset(lam).values] += 1
        acc = AlphaPolynomial()
        for hooks, mult in sorted(groups.items()):
            acc = acc + _D_from_hooks(hooks) * mult
        num.append(acc)
    return num


def nekrasov_okounkov_bracket(N: int, cap: int = DEFAULT_PARTITION_CAP) -> TruncatedQSeries:
    """<D_alpha>_q with alpha-polynomial coefficients."""
    num = TruncatedQSeries(_no_numerator(N, cap))
    return num * euler_series(N).inverse()


def eta_power_alpha(N: int) -> TruncatedQSeries:
    """exp(alpha * log prod (1-q^n)), i.e. eta^alpha with its q^(alpha/24) stripped."""
    log_prod = series_log(TruncatedQSeries(euler_product_coeffs(N)))
    alpha = AlphaPolynomial([0, 1])
    return series_exp(TruncatedQSeries([alpha * c for c in log_prod.coeffs]))


def verify_nekrasov_okounkov(N: int = 20, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    if N < 1:
        raise DomainError(f"order must be >= 1, got {N}")
    lhs = nekrasov_okounkov_bracket(N, cap)
    rhs = eta_power_alpha(N)
    notes = ["offsets: q^(alpha/24) on the left matches eta's q^(alpha/24); compared offset-stripped"]
    return _compare("nekrasov-okounkov", {}, N, lhs, rhs, notes)


# -- moments S_{2k} --


def eisenstein_series(k: int, N: int) -> TruncatedQSeries:
    """E_{2k} = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n."""
    B = bernoulli(2 * k)
    return 1 - divisor_sum_series(2 * k - 1, N) * (Fraction(4 * k) / B)


def verify_S2k_bracket(k: int, N: int = DEFAULT_ORDER, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    lhs = q_bracket(lambda lam: moment_S(lam, k), N, cap)
    mid = divisor_sum_series(2 * k - 1, N)
    rhs = (1 - eisenstein_series(k, N)) * (bernoulli(2 * k) / (4 * k))
    report = _compare("s2k", {"k": k}, N, lhs, mid)
    if report.passed:
        report = _compare("s2k", {"k": k}, N, mid, rhs, ["checked against the Eisenstein form as well"])
    return report


def f_hook_values(a: int, t: int):
    return lambda lam: f_hook(lam, a, t)
