"""Integer partitions, hook numbers and the partition statistics whose
q-brackets are studied in this package.

Hooks are computed cell by cell from the conjugate partition; nothing clever.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import chain
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, ResourceLimitError
from .poly import AlphaPolynomial, Poly

DEFAULT_PARTITION_CAP = 60


@dataclass(frozen=True)
class Partition:
    """A nonincreasing tuple of positive integers."""

    parts: tuple[int, ...]
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition parts must be nonincreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def conjugate(self) -> Partition:
        return Partition(conjugate_parts(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


@dataclass(frozen=True)
class HookMultiset:
    """Multiset of hook numbers, stored as a sorted tuple."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        object.__setattr__(self, "values", tuple(sorted(values)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def counts(self) -> Counter:
        return Counter(self.values)

    def divisible_by(self, t: int) -> HookMultiset:
        return HookMultiset(h for h in self.values if h % t == 0)


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise DomainError(f"partition size must be nonnegative, got {n}")
    if n > cap:
        raise ResourceLimitError(f"partitions of {n} exceed the configured cap {cap}")


def iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, lexicographically decreasing (ZS1 order)."""
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def enumerate_partitions(n: int, cap: int = DEFAULT_PARTITION_CAP) -> list[Partition]:
    """Every partition of n exactly once, lexicographically decreasing."""
    _check_cap(n, cap)
    return [Partition(p) for p in iter_partition_tuples(n)]


def hook_numbers(parts: tuple[int, ...]) -> list[int]:
    conj = conjugate_parts(parts)
    return [
        row - i + conj[j] - j - 1
        for i, row in enumerate(parts)
        for j in range(row)
    ]


def hook_multiset(lam: Partition) -> HookMultiset:
    return HookMultiset(hook_numbers(lam.parts))


def t_hook_multiset(lam: Partition, t: int) -> HookMultiset:
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    return hook_multiset(lam).divisible_by(t)


def _inverse_power(h: int, a: int) -> Fraction:
    return Fraction(1, h**a) if a >= 0 else Fraction(h ** (-a))


def f_hook(lam: Partition, a: int, t: int) -> Fraction:
    """t^(a-1) * sum of h^(-a) over the hooks of lam divisible by t, exactly."""
    hooks = t_hook_multiset(lam, t)
    total = sum((_inverse_power(h, a) for h in hooks), Fraction(0))
    return Fraction(t) ** (a - 1) * total


def f_hook_numeric(lam: Partition, a: complex, t: int) -> complex:
    """Same statistic for complex a, with h^a = exp(a log h) on the positive reals."""
    hooks = t_hook_multiset(lam, t)
    total = sum(cmath.exp(-a * math.log(h)) for h in hooks)
    return cmath.exp((a - 1) * math.log(t)) * total


def moment_S(lam: Partition, k: int) -> int:
    """sum_j lam_j^(2k-1); for k = 1 this is |lam|."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return sum(p ** (2 * k - 1) for p in lam.parts)


def nekrasov_okounkov_D(lam: Partition) -> Poly:
    """prod over hooks h of (1 - alpha/h^2), expanded as a polynomial in alpha."""
    out = AlphaPolynomial([1])
    for h in hook_multiset(lam):
        out = out * AlphaPolynomial([1, Fraction(-1, h * h)])
    return out


# -- aggregated hook statistics (vectorized, used by the large exact suites) --

_CHUNK = 40_000


@lru_cache(maxsize=None)
def hook_count_table(n: int, cap: int = DEFAULT_PARTITION_CAP) -> tuple[int, ...]:
    """counts[h] = number of cells with hook length h, summed over all partitions of n.

    Same cell-by-cell formula as :func:`hook_numbers`, evaluated with numpy over
    blocks of partitions.
    """
    _check_cap(n, cap)
    counts = np.zeros(n + 1, dtype=np.int64)
    if n == 0:
        return tuple(int(c) for c in counts)
    block: list[tuple[int, ...]] = []
    for p in iter_partition_tuples(n):
        block.append(p + (0,) * (n - len(p)))
        if len(block) == _CHUNK:
            counts += _block_hook_counts(block, n)
            block = []
    if block:
        counts += _block_hook_counts(block, n)
    return tuple(int(c) for c in counts)


def _block_hook_counts(block: list[tuple[int, ...]], n: int) -> np.ndarray:
    P = np.fromiter(chain.from_iterable(block), dtype=np.int32, count=len(block) * n)
    P = P.reshape(len(block), n)
    cols = np.arange(n, dtype=np.int32)
    # conj[:, j] = #{parts > j}, from per-partition part-value counts
    rows = np.repeat(np.arange(len(block)), n)
    value_counts = np.bincount(rows * (n + 1) + P.ravel(), minlength=len(block) * (n + 1))
    value_counts = value_counts.reshape(len(block), n + 1)
    conj = np.cumsum(value_counts[:, ::-1], axis=1)[:, ::-1][:, 1:].astype(np.int32)
    counts = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        row = P[:, i]
        live = row > 0
        if not live.any():
            break
        row = row[live, None]
        width = int(row.max())
        hooks = row - i + conj[live, :width] - cols[None, :width] - 1
        valid = cols[None, :width] < row
        counts += np.bincount(hooks[valid], minlength=n + 1)[: n + 1]
    return counts
