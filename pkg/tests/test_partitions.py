from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qbracket.errors import DomainError, ResourceLimitError
from qbracket.partitions import (
    Partition,
    enumerate_partitions,
    f_hook,
    f_hook_numeric,
    hook_count_table,
    hook_multiset,
    hook_numbers,
    moment_S,
    nekrasov_okounkov_D,
    t_hook_multiset,
)


def brute_partitions(n, largest=None):
    # independent recursive enumeration
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def diagram_hooks(parts):
    # arm + leg + 1 read off the Ferrers diagram cell set
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    hooks = []
    for (i, j) in cells:
        arm = sum(1 for jj in range(j + 1, parts[i]))
        leg = sum(1 for ii in range(i + 1, len(parts)) if (ii, j) in cells)
        hooks.append(arm + leg + 1)
    return sorted(hooks)


partitions_st = st.integers(0, 20).flatmap(lambda n: st.sampled_from(brute_partitions(n)))


def test_enumerate_small():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(10)) == 42


@pytest.mark.parametrize("n", range(0, 19))
def test_enumeration_matches_recursive(n):
    assert [p.parts for p in enumerate_partitions(n)] == brute_partitions(n)


def test_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_partitions(61)
    assert len(enumerate_partitions(5, cap=5)) == 7
    with pytest.raises(DomainError):
        enumerate_partitions(-1)


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition((3, 4))
    with pytest.raises(DomainError):
        Partition((2, 0))
    assert Partition((4, 3, 1)).size == 8
    assert Partition(()).size == 0


def test_hook_examples():
    assert hook_multiset(Partition((4, 3, 1))).values == (1, 1, 1, 2, 3, 4, 4, 6)
    assert hook_multiset(Partition((1,))).values == (1,)
    assert hook_multiset(Partition((2, 1))).values == (1, 1, 3)
    lam = Partition((4, 3, 1))
    assert t_hook_multiset(lam, 2).values == (2, 4, 4, 6)
    assert t_hook_multiset(lam, 3).values == (3, 6)
    assert t_hook_multiset(lam, 7).values == ()
    with pytest.raises(DomainError):
        t_hook_multiset(lam, 0)


def test_f_hook_examples():
    lam = Partition((4, 3, 1))
    assert f_hook(lam, 3, 1) == Fraction(307, 96)
    assert f_hook(lam, 3, 2) == Fraction(139, 216)
    assert f_hook(lam, 3, 3) == Fraction(3, 8)
    assert f_hook(Partition((2, 1)), 2, 1) == Fraction(19, 9)
    # a <= 0 gives positive powers of hooks
    assert f_hook(lam, -1, 1) == Fraction(1 + 1 + 1 + 2 + 3 + 4 + 4 + 6)


def test_moment_S():
    lam = Partition((4, 3, 1))
    assert moment_S(lam, 1) == 8
    assert moment_S(lam, 2) == 92
    assert moment_S(Partition(()), 3) == 0


def test_nekrasov_okounkov_D_examples():
    assert nekrasov_okounkov_D(Partition((1,))).coeffs == (1, -1)
    assert nekrasov_okounkov_D(Partition((2,))).coeffs == (1, Fraction(-5, 4), Fraction(1, 4))
    assert nekrasov_okounkov_D(Partition(())).coeffs == (1,)


@given(partitions_st)
def test_hooks_match_diagram_oracle(parts):
    lam = Partition(parts)
    hooks = hook_multiset(lam)
    assert list(hooks.values) == diagram_hooks(parts)
    assert len(hooks) == lam.size
    if parts:
        assert all(1 <= h <= parts[0] + len(parts) - 1 for h in hooks)


@given(partitions_st)
def test_conjugation_symmetry(parts):
    lam = Partition(parts)
    assert hook_multiset(lam) == hook_multiset(lam.conjugate())
    assert lam.conjugate().conjugate() == lam


@given(partitions_st, st.integers(1, 25), st.integers(-3, 5))
def test_t_hooks_restrict(parts, t, a):
    lam = Partition(parts)
    full = hook_multiset(lam)
    assert t_hook_multiset(lam, t).values == tuple(h for h in full.values if h % t == 0)
    if not parts or t > max(full.values):
        assert f_hook(lam, a, t) == 0
    if t == 1:
        assert f_hook(lam, a, 1) == sum(Fraction(1, h) ** a if a >= 0 else Fraction(h) ** (-a) for h in full)


@given(partitions_st, st.integers(-4, 6), st.integers(1, 4))
def test_numeric_matches_exact(parts, a, t):
    lam = Partition(parts)
    exact = f_hook(lam, a, t)
    approx = f_hook_numeric(lam, complex(a), t)
    assert abs(approx - float(exact)) <= 1e-12 * max(1.0, abs(float(exact)))


@given(partitions_st)
def test_D_vanishes_at_squared_hooks(parts):
    lam = Partition(parts)
    D = nekrasov_okounkov_D(lam)
    assert D.degree == lam.size
    for h in set(hook_multiset(lam)):
        assert D(Fraction(h * h)) == 0


@given(partitions_st, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_D_specialization(parts, alpha):
    lam = Partition(parts)
    direct = Fraction(1)
    for h in hook_multiset(lam):
        direct *= 1 - alpha / (h * h)
    assert nekrasov_okounkov_D(lam)(alpha) == direct


@pytest.mark.parametrize("n", range(0, 18))
def test_hook_count_table_matches_per_partition(n):
    expect = Counter()
    for lam in enumerate_partitions(n):
        expect.update(hook_numbers(lam.parts))
    table = hook_count_table(n)
    assert all(table[h] == expect.get(h, 0) for h in range(n + 1))
    assert sum(table) == n * len(enumerate_partitions(n))
