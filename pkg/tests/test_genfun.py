import pytest

from dyckmotz import (
    FIXED_POINT_PATTERNS,
    PATTERNS,
    PathProfile,
    distribution_brute_force,
    distribution_gf_closed,
    distribution_gf_fixed_point,
    du_from_ud,
    enumerate_constrained,
    motzkin_number,
    parse_pattern,
    popularity_gf,
)

N = 10


def test_pattern_roster():
    assert len(PATTERNS) == 12
    assert set(FIXED_POINT_PATTERNS) <= set(PATTERNS)


def test_brute_force_rows_match_direct_counting():
    series = distribution_brute_force("UUD", 7).series
    expr = parse_pattern("UUD")
    for n in range(8):
        tally = {}
        for p in enumerate_constrained(n):
            k = PathProfile(p).count(expr)
            tally[k] = tally.get(k, 0) + 1
        for k, count in tally.items():
            assert series.coefficient(n, k) == count


def test_closed_forms_agree_with_brute_force():
    for pattern in PATTERNS:
        closed = distribution_gf_closed(pattern, N).series
        brute = distribution_brute_force(pattern, N).series
        assert closed == brute, pattern


def test_fixed_points_agree_with_brute_force():
    for pattern in FIXED_POINT_PATTERNS:
        fixed = distribution_gf_fixed_point(pattern, N)
        brute = distribution_brute_force(pattern, N).series
        assert fixed.series == brute, pattern
        if fixed.components:
            total = 1 + fixed.components["A"] + fixed.components["B"]
            assert total == fixed.series, pattern


def test_fixed_point_requires_known_pattern():
    with pytest.raises(KeyError):
        distribution_gf_fixed_point("UUD", 6)
    with pytest.raises(KeyError):
        distribution_gf_closed("UDUD", 6)


def test_row_sums_are_motzkin_numbers():
    series = distribution_gf_closed("DUD", N).series
    for n in range(N + 1):
        assert sum(series.y_poly(n)) == motzkin_number(n)


def test_specific_distribution_cells():
    cells = {
        ("UD", 7, 4): 44,
        ("UUU", 9, 3): 215,
        ("UUD", 9, 2): 432,
        ("DUU", 9, 1): 432,
        ("DUD", 9, 2): 199,
        ("UDU", 9, 2): 200,
        ("UDD", 9, 3): 417,
        ("DDU", 9, 2): 444,
        ("DDD", 9, 1): 251,
    }
    series = {p: distribution_gf_closed(p, 9).series for p in
              {p for p, _, _ in cells}}
    for (pattern, n, k), value in cells.items():
        assert series[pattern].coefficient(n, k) == value, (pattern, n, k)


def test_avoider_columns():
    udu = distribution_gf_closed("UDU", 9).series
    assert [udu.coefficient(n, 0) for n in range(1, 10)] == [
        1, 1, 2, 4, 8, 17, 37, 82, 185]
    ddd = distribution_gf_closed("DDD", 9).series
    assert [ddd.coefficient(n, 0) for n in range(1, 10)] == [
        1, 2, 3, 6, 11, 22, 43, 87, 176]
    dud = distribution_gf_closed("DUD", 9).series
    assert [dud.coefficient(n, 0) for n in range(1, 10)] == [
        1, 1, 1, 2, 3, 6, 10, 20, 36]
    duu = distribution_gf_closed("DUU", 9).series
    assert [duu.coefficient(n, 0) for n in range(1, 10)] == [
        2 ** (n - 1) for n in range(1, 10)]


def test_popularity_values():
    ud = popularity_gf("UD", 12)
    assert [ud.coefficient(n) for n in range(1, 13)] == [
        1, 3, 8, 22, 61, 171, 483, 1373, 3923, 11257, 32418, 93644]
    uu = popularity_gf("UU", 12)
    assert uu.coefficient(11) == 31360
    dd = popularity_gf("DD", 12)
    assert dd.coefficient(11) == 31360


def test_popularity_identities():
    ud = popularity_gf("UD", N + 1)
    udu = popularity_gf("UDU", N + 1)
    du = popularity_gf("DU", N + 1)
    uu = popularity_gf("UU", N + 1)
    for n in range(1, N + 1):
        assert udu.coefficient(n + 1) == ud.coefficient(n)
        assert du.coefficient(n) == ud.coefficient(n) - motzkin_number(n)
        assert uu.coefficient(n) + ud.coefficient(n) == n * motzkin_number(n)


def test_du_series_rebuilt_from_ud():
    result = du_from_ud(N)
    assert result.pattern == "DU"
    assert result.series == distribution_gf_closed("DU", N).series


def test_distribution_starts_at_one():
    for pattern in PATTERNS:
        series = distribution_gf_closed(pattern, 5).series
        assert series.y_poly(0) == [1]
