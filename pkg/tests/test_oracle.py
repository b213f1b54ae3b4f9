import pytest

from patlab import perms
from patlab.oracle import ORACLE_MAX_N, brute_distribution
from patlab.series import Poly, catalan, poly_str

X = Poly.variable("x")
Y = Poly.variable("y")


def test_single_pattern_slice():
    d = brute_distribution((1, 2, 3), [(1, 3, 2)], 3)
    assert d.poly == X * Y + 3 * Y + Poly.variable("y", 2)
    assert d.variables == ("x",)


def test_four_pattern_slice():
    d = brute_distribution((1, 3, 2),
                           [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1)], 3)
    want = (Poly.variable("x1") + Poly.variable("x2") * Y
            + Poly.variable("x3") * Y + Poly.variable("x4") * Y * Y + Y)
    assert d.poly == want


def test_untracked_slice_counts_class():
    d = brute_distribution((1, 2, 3), [], 4)
    assert sum(c for _, c in d.poly.terms()) == 14


def test_track_des_off():
    d = brute_distribution((1, 3, 2), [(2, 3, 1)], 4, track_des=False)
    assert poly_str(d.poly) == "8 + 6*x"


def test_coefficient_sums_and_degree_bounds():
    patterns = [(1, 3, 2), (2, 3, 1)]
    for lam in ((1, 2, 3), (1, 3, 2)):
        for n in range(8):
            d = brute_distribution(lam, patterns, n)
            assert sum(c for _, c in d.poly.terms()) == catalan(n)
            assert d.poly.degree("y") <= max(n - 1, 0)
            for var, g in zip(d.variables, patterns):
                assert d.poly.degree(var) <= max(n - len(g) + 1, 0)


def test_window_totals_cover_all_length3_patterns():
    # Every length-3 window is one of the five patterns available to the
    # avoidance class, so tracked counts total n - 2.
    gammas = [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    for n in range(3, 8):
        for p in perms.avoider_list((1, 2, 3), n):
            total = sum(perms.consecutive_matches(p, g)[1] for g in gammas)
            assert total == n - 2


def test_limit():
    with pytest.raises(ValueError):
        brute_distribution((1, 2, 3), [(1, 3, 2)], ORACLE_MAX_N + 1)


def test_variable_count_must_match():
    with pytest.raises(ValueError):
        brute_distribution((1, 2, 3), [(1, 3, 2)], 3, variables=("x1", "x2"))
