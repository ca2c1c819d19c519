from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetcx.groups import all_subgroups, build_group
from cosetcx.zeta import (
    bouc_check,
    coset_poset_euler,
    eval_P,
    generation_probability,
    hall_series,
    moebius_table,
)

from conftest import CORPUS, group


def test_moebius_zp():
    G = build_group("cyclic:7")
    mu = moebius_table(G)
    assert mu[(0,)] == -1 and mu[tuple(range(7))] == 1


def test_moebius_klein(klein):
    mu = moebius_table(klein)
    subs = all_subgroups(klein)
    assert [mu[H] for H in subs] == [2, -1, -1, -1, 1]


def test_moebius_s3(S3):
    mu = moebius_table(S3)
    for H in all_subgroups(S3):
        expected = {1: 3, 2: -1, 3: -1, 6: 1}[len(H)]
        assert mu[H] == expected


def test_series_zp():
    assert hall_series(build_group("cyclic:5")).render() == "1 - 5^-s"


def test_series_klein(klein):
    s = hall_series(klein)
    assert s.render() == "1 - 3*2^-s + 2*4^-s"
    assert s.to_dict() == {"1": 1, "2": -3, "4": 2}


def test_series_s3(S3):
    assert hall_series(S3).render() == "1 - 2^-s - 3*3^-s + 3*6^-s"


def test_series_trivial_group():
    s = hall_series(build_group("cyclic:1"))
    assert s.render() == "1" and s.coefficient(1) == 1


def test_eval_zp_minus_one():
    for p in (2, 3, 5, 7, 11, 13):
        assert eval_P(build_group(f"cyclic:{p}"), -1) == 1 - p


def test_eval_klein(klein):
    assert eval_P(klein, -1) == 3


def test_eval_s3_pairs(S3):
    assert eval_P(S3, 2) == Fraction(1, 2)
    assert generation_probability(S3, 2) == Fraction(18, 36)


def test_nonpositive_values_are_integers():
    for name in ("S3", "D4", "A4"):
        G = group(name)
        for s in (0, -1, -2):
            assert eval_P(G, s).denominator == 1


def test_bouc_zp():
    assert bouc_check(build_group("cyclic:11"))


def test_bouc_klein(klein):
    assert eval_P(klein, -1) == 3 == -coset_poset_euler(klein)


@pytest.mark.parametrize("name", list(CORPUS))
def test_bouc_corpus(name):
    assert bouc_check(group(name))


@pytest.mark.parametrize("name", list(CORPUS))
def test_moebius_recursion(name):
    G = group(name)
    mu = moebius_table(G)
    subs = all_subgroups(G)
    for H in subs:
        if len(H) == G.order:
            assert mu[H] == 1
            continue
        above = [K for K in subs if H.memberset <= K.memberset]
        assert sum(mu[K] for K in above) == 0


@pytest.mark.parametrize("name", [n for n in CORPUS if group(n).order <= 24])
def test_generation_oracle(name):
    G = group(name)
    for k in (1, 2, 3):
        assert eval_P(G, k) == generation_probability(G, k)


def test_p_of_one_for_cyclic():
    # a single element generates Z_n with probability phi(n)/n
    from math import gcd
    for n in range(1, 17):
        phi = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert eval_P(build_group(f"cyclic:{n}"), 1) == Fraction(phi, n)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 40))
def test_cyclic_series_is_multiplicative(n):
    # P(Z_n, s) = prod over primes p | n of (1 - p^-s)
    G = build_group(f"cyclic:{n}")
    expected = Fraction(1)
    m, p = n, 2
    while m > 1:
        if m % p == 0:
            expected *= 1 - Fraction(p)
            while m % p == 0:
                m //= p
        p += 1
    assert eval_P(G, -1) == expected


def test_series_at_zero_sums_coefficients(S3):
    assert sum(c for _, c in hall_series(S3).terms) == eval_P(S3, 0)
