import math

import pytest
from hypothesis import given, settings, strategies as st

from qbracket.asymptotics import (
    CSV_HEADER,
    TABLE_CUTOFF,
    a1_expansion,
    asymptotic_table,
    bernoulli_form_coeff,
    g_hat,
    g_tilde,
    residue_coeff,
    table_csv,
    table_json,
)
from qbracket.errors import DomainError, TruncationError

# t, G-hat, G-tilde, ratio (reference table)
TABLE = [
    (2, 0.2602861623, 0.2602864321, 0.9999989634),
    (1.5, 0.6578359053, 0.6578359052, 0.9999999998),
    (1, 2.3214805734, 2.3214805734, 1.0000000000),
    (0.5, 19.0665916994, 19.0665916994, 1.0000000000),
    (0.1, 2403.2805424358, 2403.2805424358, 1.0000000000),
]


def _g_hat_direct(k, t):
    return math.fsum(sum(d ** (k - 1) for d in range(1, n + 1) if n % d == 0) * math.exp(-n * t) for n in range(1, 300))


def test_g_hat_examples():
    assert abs(g_hat(3, 1) - 2.3214805734) < 5e-10
    assert abs(g_hat(3, 2) - 0.2602861623) < 5e-10
    assert abs(g_hat(3, 0.1) - 2403.2805424358) < 5e-10
    for t in (0.5, 1.0, 2.0):
        assert g_hat(5, t) == pytest.approx(_g_hat_direct(5, t), rel=1e-13)
    with pytest.raises(TruncationError):
        g_hat(3, 0.005)
    with pytest.raises(DomainError):
        g_hat(4, 1)


def test_g_tilde_examples():
    # the reference t = 2 value is the n <= 25 partial sum, optimal truncation stops at n = 17
    assert abs(g_tilde(3, 2, TABLE_CUTOFF).g_tilde - 0.2602864321) < 5e-10
    assert abs(g_tilde(3, 1.5).g_tilde - 0.6578359052) < 5e-10
    assert abs(g_tilde(3, 0.5).g_tilde - 19.0665916994) < 5e-10
    r = g_tilde(3, 2)
    assert r.truncation_index == 17
    assert abs(r.g_tilde - 0.2602864321) < 1e-6


def test_table_reproduction():
    rows = asymptotic_table(3, [t for t, *_ in TABLE])
    for row, (t, gh, gt, ratio) in zip(rows, TABLE):
        assert abs(row.g_hat - gh) < 5e-10
        assert abs(row.g_tilde - gt) < 5e-10
        assert abs(row.ratio - ratio) < 5e-11
        assert row.ratio == row.g_hat / row.g_tilde


def test_csv_and_json():
    rows = asymptotic_table(3, [2, 1])
    text = table_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(CSV_HEADER) == "t,g_hat,g_tilde,ratio,trunc_index"
    assert lines[1] == "2,0.2602861623,0.2602864321,0.9999989634,25"
    assert '"truncation_index": 25' in table_json(rows)


def test_ratio_monotone():
    dev = {t: abs(g_tilde(3, t, TABLE_CUTOFF).ratio - 1) for t in (0.5, 1.5, 2)}
    assert dev[0.5] < dev[1.5] < dev[2]


@pytest.mark.parametrize("t", [1.0, 0.5, 0.1])
def test_optimal_truncation_error(t):
    r = g_tilde(3, t)
    # below double precision the smallest term is meaningless, so allow 8 ulp of roundoff
    floor = 8 * math.ulp(r.g_hat)
    assert abs(r.g_hat - r.g_tilde) < 10 * r.smallest_term + floor


def test_optimal_truncation_error_t1_strict():
    r = g_tilde(3, 1.0)
    assert abs(r.g_hat - r.g_tilde) < 10 * r.smallest_term


def test_zero_pattern_k3():
    for n in range(0, 60):
        c = residue_coeff(3, n)
        if n % 2 == 0:
            assert c == 0
        else:
            assert c != 0


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_bernoulli_form_agrees(k):
    for n in range(60):
        assert bernoulli_form_coeff(k, n) == residue_coeff(k, n)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 5), st.floats(0.001, 1))
def test_g_hat_decreasing(t, dt):
    assert g_hat(3, t + dt) < g_hat(3, t)


def test_a1_record():
    rec = a1_expansion(0.1)
    for key in ("t", "stated_value", "oracle_value", "classical_value", "discrepancy", "classical_discrepancy"):
        assert key in rec
    direct = math.fsum(sum(1 for d in range(1, n + 1) if n % d == 0) * math.exp(-0.1 * n) for n in range(1, 800))
    assert abs(rec["oracle_value"] - direct) < 1e-10
    assert rec["discrepancy"] == rec["stated_value"] - rec["oracle_value"]
    with pytest.raises(DomainError):
        a1_expansion(2.0)
