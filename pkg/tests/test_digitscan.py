import random

import pytest

from fibdigits.digitscan import (
    TABLE1_ROWS,
    DigitSet,
    ScanConfig,
    max_depth_survey,
    required_scan_bound,
    rightmost_hit_depth,
    scan_digit_set,
    tail_hits,
    tail_string,
)
from fibdigits.fibcore import fib_exact, fib_mod

TABLE1_SETS = [row.digit_set for row in TABLE1_ROWS]
INCONCLUSIVE_OMITS = [(1,), (3,), (5,), (7,), (8,), (2, 4), (2, 6), (4, 6)]


def _digits(x, base, pad=0):
    out = []
    while x:
        x, d = divmod(x, base)
        out.append(d)
    out = out or [0]
    return out + [0] * (pad - len(out))


def brute_scan(members, base, n, length):
    """Plain-loop reference for scan_digit_set: (exceptions, witness index)."""
    m = base**n
    exceptions, witness = [], None
    a, b = 1, 1  # exact values while small, residues afterwards
    small = True
    for k in range(1, length + 1):
        if small and a >= m:
            small = False
        r = a % m
        tail_ok = any(d in members for d in _digits(r, base, n))
        if small and tail_ok and not any(d in members for d in _digits(a, base)):
            exceptions.append((k, a))
        if not tail_ok and witness is None:
            witness = k
        a, b = (b, a + b) if small else (b % m, (a + b) % m)
    return exceptions, witness


@pytest.mark.parametrize("n, base, expected", [(3, 10, 1500), (5, 10, 150000), (1, 10, 60), (2, 10, 300), (4, 10, 15000)])
def test_required_scan_bound(n, base, expected):
    assert required_scan_bound(n, base) == expected


def test_required_scan_bound_other_base():
    # 2**4 = 16 has period 24
    assert required_scan_bound(4, 2) == 24


def test_required_scan_bound_rejects_huge_modulus():
    with pytest.raises(ValueError):
        required_scan_bound(13, 10)


def _scan(omit, n, **kw):
    return scan_digit_set(ScanConfig.build(DigitSet.omit(omit), n), **kw)


def test_table_covered_rows():
    v = _scan([6], 5)
    assert v.covered and v.exceptions == ()
    v = _scan([2], 3)
    assert v.covered and v.exceptions == ((3, 2),)
    v = _scan([4], 3)
    assert v.covered and v.exceptions == ()


def test_full_set_is_covered():
    v = scan_digit_set(ScanConfig.build(DigitSet.of(range(10)), 3))
    assert v.covered and v.exceptions == ()


def test_omit_seven_inconclusive_at_three():
    v = _scan([7], 3)
    assert not v.covered
    assert set(v.witness.tail) == {"7"}


@pytest.mark.parametrize("digit_set", TABLE1_SETS, ids=lambda s: s.label())
@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_brute_force(digit_set, n):
    length = required_scan_bound(n)
    exceptions, witness = brute_scan(digit_set.members, 10, n, length)
    v = scan_digit_set(ScanConfig.build(digit_set, n))
    assert list(v.exceptions) == exceptions
    assert (v.witness.index if v.witness else None) == witness


@pytest.mark.parametrize(
    "members, base, n",
    [({1, 2}, 3, 4), ({0, 1}, 2, 6), ({3, 5, 7}, 8, 3), ({0, 10, 11}, 12, 3), ({1, 2, 3, 5, 8}, 10, 4), ({9}, 16, 2), ({0}, 10, 2)],
)
def test_other_sets_and_bases_match_brute_force(members, base, n):
    config = ScanConfig.build(DigitSet.of(members, base), n)
    exceptions, witness = brute_scan(members, base, n, config.scan_length)
    v = scan_digit_set(config)
    assert list(v.exceptions) == exceptions
    assert (v.witness.index if v.witness else None) == witness


def test_tail_correctness_against_exact_digits():
    rng = random.Random(3)
    ks = [rng.randint(1, 5000) for _ in range(200)]
    for digit_set in TABLE1_SETS:
        config = ScanConfig.build(digit_set, 3)
        hits = tail_hits(config, 1, 5001)
        for k in ks:
            tail = _digits(fib_exact(k) % 1000, 10, 3)
            assert hits[k - 1] == any(d in digit_set.members for d in tail), (digit_set, k)


def test_covered_spot_check_beyond_scan():
    rng = random.Random(4)
    for omit, n in [([2], 3), ([4], 3), ([6], 5)]:
        v = _scan(omit, n)
        assert v.covered
        S, L, m = v.config.digit_set.members, v.config.scan_length, v.config.modulus
        for _ in range(100):
            k = rng.randint(L + 1, L + 10**4)
            assert any(d in S for d in _digits(fib_mod(k, m), 10, n)), (omit, k)


@pytest.mark.parametrize("omit", INCONCLUSIVE_OMITS)
def test_witness_tail_avoids_set(omit):
    v = _scan(omit, 4)
    S = v.config.digit_set.members
    tail = _digits(fib_mod(v.witness.index, 10**4), 10, 4)
    assert not any(d in S for d in tail)
    assert v.witness.tail == "".join(map(str, reversed(tail)))


@pytest.mark.parametrize("omit", INCONCLUSIVE_OMITS)
def test_monotone_inconclusiveness(omit):
    assert not _scan(omit, 5).covered
    for n in range(1, 5):
        assert not _scan(omit, n).covered


@pytest.mark.parametrize("omit", [(6,), (1,), (2, 4), (4, 6), (5,)])
def test_chunked_scan_is_deterministic(omit):
    base = _scan(omit, 5, chunks=1)
    for chunks in (4, 16):
        assert _scan(omit, 5, chunks=chunks) == base
        assert _scan(omit, 5, chunks=chunks, workers=4) == base


def test_scan_rejects_non_period():
    config = ScanConfig(DigitSet.omit([6]), 3, 1499)
    with pytest.raises(ValueError, match="not a period"):
        scan_digit_set(config)


def test_scan_accepts_multiple_of_period():
    config = ScanConfig(DigitSet.omit([2]), 3, 3000)
    assert scan_digit_set(config).exceptions == ((3, 2),)


def test_tail_string():
    assert tail_string(21, 5) == "10946"
    assert tail_string(21, 7) == "0010946"
    assert tail_string(300, 12) == "764990979600"


def test_digit_set_validation():
    with pytest.raises(ValueError):
        DigitSet.of([], 10)
    with pytest.raises(ValueError):
        DigitSet.of([10], 10)
    with pytest.raises(ValueError):
        DigitSet.omit(range(10))
    assert DigitSet.omit([2, 4]).label() == "{0,...,9}\\{2,4}"
    assert DigitSet.of([1, 2, 3, 5, 8]).label() == "{1,2,3,5,8}"


def test_report_fields():
    d = _scan([2], 3).to_dict()
    assert d["exceptions"] == [{"index": 3, "value": "2"}]
    assert d["witness"] is None and d["verdict"] == "covered"
    assert d["modulus"] == 1000 and d["scan_length"] == 1500


FIBONACCI_DIGITS = DigitSet.of([1, 2, 3, 5, 8])


@pytest.mark.parametrize(
    "x, members, depth",
    [(10946, [1, 2, 3, 5, 8], 5), (55, [5], 1), (4, [1, 2, 3, 5, 8], None)],
)
def test_rightmost_hit_depth(x, members, depth):
    assert rightmost_hit_depth(x, DigitSet.of(members)) == depth


def test_f300_depth():
    assert rightmost_hit_depth(fib_exact(300), FIBONACCI_DIGITS) == 20


def test_depth_survey():
    survey = max_depth_survey(20, FIBONACCI_DIGITS)
    assert survey.max_depth == 3
    survey = max_depth_survey(21, FIBONACCI_DIGITS)
    assert survey.records[-1].index == 21 and survey.records[-1].depth == 5
    survey = max_depth_survey(1, FIBONACCI_DIGITS)
    assert [(r.index, r.depth) for r in survey.records] == [(1, 1)]


def test_depth_survey_against_string_scan():
    survey = max_depth_survey(400, FIBONACCI_DIGITS)
    best, expected, missing = 0, [], []
    for k in range(1, 401):
        s = str(fib_exact(k))[::-1]
        pos = next((i + 1 for i, c in enumerate(s) if c in "12358"), None)
        if pos is None:
            missing.append(k)
        elif pos > best:
            best = pos
            expected.append((k, pos))
    assert [(r.index, r.depth) for r in survey.records] == expected
    assert survey.no_hit == missing
    assert (300, 20) in expected


def test_depth_survey_reports_no_hit_indices():
    survey = max_depth_survey(12, DigitSet.of([4]))
    # F(1..12) = 1 1 2 3 5 8 13 21 34 55 89 144; only 34 and 144 contain 4
    assert survey.no_hit == [1, 2, 3, 4, 5, 6, 7, 8, 10, 11]
    assert [(r.index, r.depth) for r in survey.records] == [(9, 1)]
