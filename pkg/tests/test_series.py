import pytest
from hypothesis import given, settings, strategies as st

from patlab.series import (
    NonContractiveError,
    NonInvertibleError,
    Poly,
    TruncatedSeries,
    catalan,
    fixed_point_solve,
    gen_binom,
    geometric,
    monomial_str,
    multinom,
    poly_str,
    series_str,
    y_reverse,
)

T = Poly.variable("t")
Y = Poly.variable("y")
X = Poly.variable("x")


def coeffs(series, var="t"):
    return [series.t_slice(n).constant_term() for n in range(series.order + 1)]


def test_poly_basic_products():
    assert (1 + T) * (1 - T) == 1 - T ** 2
    s = TruncatedSeries.of(Poly.const(1) + T * Y, 1)
    assert series_str(s * s) == "1 + 2*t*y"
    a = fixed_point_solve([lambda v, c: c.one + c.t], 2)[0]
    q = (Y * (a - 1) + 1) ** 2
    assert q.t_slice(0) == Poly.const(1)
    assert q.t_slice(1) == 2 * Y
    assert q.t_slice(2) == Y * Y


def test_series_mixing_uses_min_order():
    a = TruncatedSeries.of(Poly.const(1) + T, 5)
    b = TruncatedSeries.of(Poly.const(1) + T, 2)
    assert (a * b).order == 2
    assert (a + b).order == 2


def test_geometric_series():
    one = TruncatedSeries.const(1, 3)
    t = TruncatedSeries(T, 3)
    assert series_str(geometric(one, t)) == "1 + t + t^2 + t^3"


def test_division_by_catalan_denominator():
    # 1/(1 - t D) reproduces D itself when D is the Catalan series.
    d = fixed_point_solve([lambda v, c: c.one + c.t * v[0] ** 2], 3)[0]
    one = TruncatedSeries.const(1, 3)
    t = TruncatedSeries(T, 3)
    quotient = one.div_unit(one - t * d)
    assert coeffs(quotient) == [1, 1, 2, 5]


def test_division_requires_unit_constant_term():
    d = fixed_point_solve([lambda v, c: c.one + c.t * v[0] ** 2], 3)[0]
    with pytest.raises(NonInvertibleError):
        (d - 1).inverse_unit()


def test_div_unit_cancels_products():
    b = TruncatedSeries.of(Poly.const(1) + T * Y + Poly.variable("t", 2), 6)
    a = TruncatedSeries.of(Poly.const(1) - T + X * Poly.variable("t", 3), 6)
    assert (a * b).div_unit(b).poly == a.poly


def test_all_three_catalan_recursions_agree():
    last_segment = fixed_point_solve(
        [lambda v, c: c.geo(c.one, c.t * v[0])], 9)[0]
    first_return = fixed_point_solve(
        [lambda v, c: c.one + c.t * v[0] ** 2], 9)[0]
    combined = fixed_point_solve(
        [lambda v, c: c.one + v[0] * c.geo(c.t, c.t * v[0])], 9)[0]
    expected = [catalan(n) for n in range(10)]
    assert coeffs(last_segment) == expected
    assert coeffs(first_return) == expected
    assert coeffs(combined) == expected


def test_fixed_point_rejects_non_contractive_equation():
    with pytest.raises(NonContractiveError):
        fixed_point_solve([lambda v, c: v[0] + c.t], 4)


def test_fixed_point_solver_residual_postcondition():
    sol = fixed_point_solve([lambda v, c: c.one + c.t * v[0] ** 2], 6)[0]
    ctx_eval = TruncatedSeries.const(1, 6) + TruncatedSeries(T, 6) * sol ** 2
    assert ctx_eval.poly == sol.poly


def test_substitution_motzkin():
    # M = 1 + t y M + t^2 x M^2 turns into the Motzkin series at y = x = 1
    # and into 1/(1 - t) when the quadratic part is switched off.
    s = fixed_point_solve(
        [lambda v, c: c.one + c.t * c.y * v[0] + c.t ** 2 * c.x * v[0] ** 2],
        6)[0]
    assert coeffs(s.substitute({"y": 1, "x": 1})) == [1, 1, 2, 4, 9, 21, 51]
    assert coeffs(s.substitute({"y": 1, "x": 0})) == [1] * 7
    assert s.substitute({}).poly == s.poly


def test_substituting_t_is_rejected():
    s = TruncatedSeries.of(Poly.const(1) + T, 3)
    with pytest.raises(ValueError):
        s.substitute({"t": 1})


def test_y_reverse_examples_and_involution():
    assert y_reverse(Poly.variable("y", 2), 3) == Poly.const(1)
    assert y_reverse(Poly.const(1), 3) == Poly.variable("y", 2)
    p = 3 * Y + X * Y + Poly.variable("y", 2)
    assert y_reverse(y_reverse(p, 4), 4) == p
    with pytest.raises(ValueError):
        y_reverse(Poly.variable("y", 3), 3)


def test_gen_binom_values():
    assert gen_binom(-2, 3) == -4
    assert gen_binom(5, 2) == 10
    assert gen_binom(3, 8) == 0
    assert gen_binom(7, -1) == 0
    assert gen_binom(-1, 0) == 1


def test_gen_binom_matches_multinom_for_nonnegative_alpha():
    for alpha in range(8):
        for j in range(10):
            want = multinom(alpha, [j, alpha - j]) if j <= alpha else 0
            assert gen_binom(alpha, j) == want


def test_multinom_values():
    assert multinom(5, [1, 4, 0, 0]) == 5
    assert multinom(3, [0, 3, 0, 0]) == 1
    assert multinom(4, [2, 1]) == 0
    assert multinom(6, [2, 2, 2]) == 90
    assert multinom(3, [-1, 4]) == 0


def test_catalan_values():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert catalan(12) == 208012


def test_lagrange_inversion_property():
    # For F = t * delta(F) with delta = (1 + (x-1) z^m)/(1 - z), the t^n
    # coefficient equals (1/n) [z^(n-1)] delta(z)^n.
    for m in (2, 3, 4):
        def eq(v, c, m=m):
            # 1 - F is a unit because F has no constant term
            return c.t * c.geo(c.one + (c.x - 1) * v[0] ** m, v[0])

        f = fixed_point_solve([eq], 12, seeds=[0])[0]
        for n in range(1, 13):
            # delta(z)^n with z played by t
            one = TruncatedSeries.const(1, max(n - 1, 0))
            zx = TruncatedSeries(T, max(n - 1, 0))
            delta = (one + (TruncatedSeries(X, max(n - 1, 0)) - 1) * zx ** m) \
                .div_unit(one - zx)
            rhs = (delta ** n).t_slice(n - 1).div_exact(n)
            assert f.t_slice(n) == rhs, (m, n)


small_polys = st.builds(
    lambda terms: sum((Poly.monomial({"t": a, "y": b, "x": c}, coeff)
                       for (a, b, c, coeff) in terms), Poly()),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                       st.integers(-5, 5)), max_size=5))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(small_polys)
@settings(max_examples=40, deadline=None)
def test_series_div_roundtrip(p):
    den = TruncatedSeries.of(Poly.const(1) + T * Y - Poly.variable("t", 2) * X, 6)
    s = TruncatedSeries.of(p, 6)
    assert (s * den).div_unit(den).poly == s.poly


def test_rendering():
    assert poly_str(Poly()) == "0"
    assert poly_str(Poly.const(-3) + X) == "-3 + x"
    slice3 = 9 + 5 * Poly.variable("x1")
    assert poly_str(slice3) == "9 + 5*x1"
    s = TruncatedSeries.of(
        Poly.const(1) + T + 2 * Poly.variable("t", 2)
        + Poly.variable("t", 3) * (4 + X), 3)
    assert series_str(s) == "1 + t + 2*t^2 + (4+x)*t^3"
    assert monomial_str((0, 2, 0, 1, 0, 0, 0), 1) == "x1*y^2"
