import random

import pytest

from fibdigits.fibcore import fib_mod
from fibdigits.pisano import (
    PisanoResult,
    pisano_csv,
    pisano_period,
    pisano_table,
    residue_set,
)


def brute_period(m):
    """First k >= 1 with (F(k), F(k+1)) = (0, 1) mod m, by plain iteration."""
    a, b, k = 1 % m, 1 % m, 1
    while (a, b) != (0, 1):
        a, b = b, (a + b) % m
        k += 1
    return k


def brute_residues(m):
    """Residues over the first m*m + 1 terms, enough to cover any period."""
    seen, a, b = set(), 0, 1
    for _ in range(m * m + 1):
        seen.add(a)
        a, b = b, (a + b) % m
    return seen


@pytest.mark.parametrize("m, period", [(2, 3), (3, 8), (4, 6), (8, 12), (9, 24), (27, 72), (10, 60), (1000, 1500)])
def test_published_periods(m, period):
    assert pisano_period(m) == PisanoResult(m, period)


def test_last_two_digits_period():
    # frozen from brute_period(100)
    assert brute_period(100) == 300
    assert pisano_period(100).period == 300


@pytest.mark.parametrize("n", [3, 4])
def test_closed_form_for_powers_of_ten(n):
    assert pisano_period(10**n).period == 15 * 10 ** (n - 1)


@pytest.mark.parametrize("m", [2**14 + 1, 10**5, 3**11, 7**6])
def test_lane_search_matches_loop(m):
    # above the plain-loop threshold the period comes from the lane search
    assert pisano_period(m).period == brute_period(m)


def test_bound_and_minimality_up_to_500():
    for m in range(2, 501):
        p = pisano_period(m).period
        assert p <= m * m + 1
        assert (fib_mod(p, m), fib_mod(p + 1, m)) == (0, 1)
        a, b = 0, 1
        for k in range(1, p):
            a, b = b, (a + b) % m
            assert (a, b) != (0, 1), (m, k)


def test_forward_periodicity():
    rng = random.Random(5)
    for _ in range(50):
        m, n = rng.randint(2, 10**4), rng.randint(0, 10**5)
        assert fib_mod(n, m) == fib_mod(n + pisano_period(m).period, m)


def test_rejects_small_modulus():
    with pytest.raises(ValueError):
        pisano_period(1)


def test_table():
    assert [r.period for r in pisano_table([2, 4, 8])] == [3, 6, 12]
    assert [r.period for r in pisano_table([3, 9, 27])] == [8, 24, 72]
    assert pisano_table([]) == []


def test_table_names_offending_modulus():
    with pytest.raises(ValueError, match="modulus 1"):
        pisano_table([5, 1, 7])


def test_csv_export():
    assert pisano_csv(pisano_table([2, 10])) == "modulus,period\n2,3\n10,60\n"


def test_residue_set_examples():
    assert 10 not in residue_set(32)
    assert residue_set(2).members() == [0, 1]
    assert residue_set(3).members() == [0, 1, 2]


def test_residue_set_matches_brute_force():
    for m in range(2, 201):
        rs = residue_set(m)
        assert set(rs.members()) == brute_residues(m), m
        assert 0 in rs and 1 in rs


def test_residue_set_rejects_large_modulus():
    with pytest.raises(ValueError):
        residue_set(10**8 + 1)
