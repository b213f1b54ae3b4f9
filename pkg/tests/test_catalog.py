from fractions import Fraction

import pytest

from patlab import catalog
from patlab.oracle import brute_distribution
from patlab.series import Poly, catalan, fixed_point_solve, poly_str, series_str


def x0_coeffs(entry_id, order):
    s = catalog.solve_catalog(entry_id, order).substitute({"y": 1, "x": 0})
    return [s.t_slice(n).constant_term() for n in range(order + 1)]


def test_thm5_slices():
    s = catalog.solve_catalog("thm5", 4).substitute({"y": 1})
    assert series_str(s) == "1 + t + 2*t^2 + (4+x)*t^3 + (8+6x)*t^4"


def test_thm8_t3_slice():
    s = catalog.solve_catalog("thm8", 3)
    want = (Poly.variable("x1") + Poly.variable("x2") * Poly.variable("y")
            + Poly.variable("x3") * Poly.variable("y")
            + Poly.variable("x4") * Poly.variable("y", 2) + Poly.variable("y"))
    assert s.t_slice(3) == want


def test_fam_123_1m2_m3_t3():
    s = catalog.solve_catalog("fam_123_1m2", 3, m=3).substitute({"y": 1})
    assert poly_str(s.t_slice(3)) == "4 + x"


def test_fam_123_2m31_m3_prefix():
    s = catalog.solve_catalog("fam_123_2m31", 4, m=3)
    assert series_str(s) == "1 + t + 2*t^2 + (4+x)*t^3 + (9+5x)*t^4"


def test_param_domains():
    with pytest.raises(ValueError):
        catalog.solve_catalog("fam_132_a1m", 4, m=3, a=1)
    with pytest.raises(ValueError):
        catalog.solve_catalog("fam_132_a1m", 4, m=3, a=3)
    with pytest.raises(ValueError):
        catalog.solve_catalog("fam_123_1m2", 4, m=1)
    with pytest.raises(ValueError):
        catalog.solve_catalog("fam_123_1m2", 4)
    with pytest.raises(ValueError):
        catalog.solve_catalog("thm5", 4, m=3)
    with pytest.raises(ValueError):
        catalog.solve_catalog("nonesuch", 4)


def test_family_patterns():
    assert catalog.family_pattern("fam_123_1m2", 3) == (1, 3, 2)
    assert catalog.family_pattern("fam_123_1m2", 5) == (1, 5, 4, 3, 2)
    assert catalog.family_pattern("fam_123_2m31", 4) == (2, 4, 3, 1)
    assert catalog.family_pattern("fam_132_1m", 4) == (1, 2, 3, 4)
    assert catalog.family_pattern("fam_132_a1m", 5, 3) == (3, 1, 2, 4, 5)
    assert catalog.family_pattern("fam_132_m1head", 4) == (3, 1, 2, 4)
    assert catalog.family_pattern("fam_132_2m1", 5) == (2, 3, 4, 5, 1)
    assert catalog.family_pattern("fam_132_a2m1", 5, 4) == (4, 2, 3, 5, 1)
    assert catalog.family_pattern("fam_132_m1m1", 5) == (4, 2, 3, 5, 1)


# -- raw sum forms ---------------------------------------------------------------
#
# The catalog compresses every infinite sum over the last-segment size into
# geometric closed forms.  Re-evaluate the defining sums term by term (all
# terms beyond the truncation order vanish) and require identical series.

def sum_powers(c, base, lo, hi, weight):
    total = c.const(0)
    for k in range(lo, min(hi, c.order) + 1):
        total = total + weight(k) * base ** k
    return total


def eq_thm3_a0(v, c):
    a0 = v[0]
    out = c.one + c.t * c.x * c.y * a0
    for k in range(2, c.order + 1):
        out = out + c.t ** k * c.x ** (k - 2) * c.y ** (k - 1) * a0 ** k
    return out


def partial(a0, a1, j, c):
    # A1 + (A1 - 1)(A0 + ... + A0^j)
    out = a1
    for i in range(1, j + 1):
        out = out + (a1 - 1) * a0 ** i
    return out


def eq_thm3_a1(v, c):
    a0, a1 = v[0], v[1]
    out = c.one + c.t * c.y * a0
    for k in range(2, c.order + 1):
        out = out + (c.t ** k * c.x ** (k - 2) * c.y ** (k - 1) * a0
                     * partial(a0, a1, k - 2, c))
    return out


def eq_thm3_a(v, c):
    a0, a1 = v[0], v[1]
    out = c.one + c.t * a1 + c.t ** 2 * partial(a0, a1, 1, c)
    for k in range(3, c.order + 1):
        out = out + (c.t ** k * c.x ** (k - 3) * c.y ** (k - 2)
                     * partial(a0, a1, k - 1, c))
    return out


def eq_thm7_a0(v, c):
    a0 = v[0]
    out = c.one + c.t * c.x3 * c.y * a0 + c.t ** 2 * c.x1 * c.y * a0 ** 2
    for k in range(3, c.order + 1):
        out = out + (c.t ** k * c.x2 * c.x3 ** (k - 2) * c.y ** (k - 1)
                     * a0 ** k)
    return out


def eq_thm7_a1(v, c):
    a0, a1 = v[0], v[1]
    out = c.one + c.t * c.y * a0 + c.t ** 2 * c.x2 * c.y * a0 * a1
    for k in range(3, c.order + 1):
        out = out + (c.t ** k * c.x1 * c.x3 ** (k - 2) * c.y ** (k - 1) * a0
                     * partial(a0, a1, k - 2, c))
    return out


def eq_thm7_a(v, c):
    a0, a1 = v[0], v[1]
    out = c.one + c.t * a1 + c.t ** 2 * partial(a0, a1, 1, c)
    for k in range(3, c.order + 1):
        out = out + (c.t ** k * c.x1 * c.x3 ** (k - 3) * c.y ** (k - 2)
                     * partial(a0, a1, k - 1, c))
    return out


def geom_tail(a0, j, c):
    # 1 + A0 + ... + A0^j
    out = c.one
    for i in range(1, j + 1):
        out = out + a0 ** i
    return out


def eq_thm8_a0(v, c):
    a0 = v[0]
    q0 = c.x2 * (a0 - 1) + 1
    out = c.one + c.t * c.x4 * c.y * a0
    for k in range(2, c.order + 1):
        out = out + (c.t ** k * c.x1 ** (k - 2) * c.x3 * c.y * a0 ** (k - 1)
                     * q0)
    return out


def eq_thm8_a1(v, c):
    a0, a1 = v[0], v[1]
    q0 = c.x2 * (a0 - 1) + 1
    q1 = c.x2 * (a1 - 1) + 1
    out = c.one + c.t * c.y * a0 + c.t ** 2 * c.x3 * c.y * a0 * q1
    for k in range(3, c.order + 1):
        out = out + (c.t ** k * c.x1 ** (k - 2) * c.x3 * c.y * a0
                     * (geom_tail(a0, k - 3, c) * q0 * (a1 - 1) + q1))
    return out


def eq_thm8_a(v, c):
    a0, a1 = v[0], v[1]
    q0 = c.x2 * (a0 - 1) + 1
    q1 = c.x2 * (a1 - 1) + 1
    out = c.one + c.t * a1
    for k in range(2, c.order + 1):
        out = out + (c.t ** k * c.x1 ** (k - 2)
                     * (geom_tail(a0, k - 2, c) * q0 * (a1 - 1) + q1))
    return out


@pytest.mark.parametrize("entry_id,raw", [
    ("thm3", [eq_thm3_a0, eq_thm3_a1, eq_thm3_a]),
    ("thm7", [eq_thm7_a0, eq_thm7_a1, eq_thm7_a]),
    ("thm8", [eq_thm8_a0, eq_thm8_a1, eq_thm8_a]),
])
def test_compressed_equations_match_raw_sums(entry_id, raw):
    order = 6
    raw_solution = fixed_point_solve(raw, order)
    system = catalog.solve_system(entry_id, order)
    names = ["A0", "A1", "A"]
    for name, raw_series in zip(names, raw_solution):
        assert system[name].poly == raw_series.poly, (entry_id, name)


def test_thm1_thm2_raw_sums():
    order = 6

    def thm1_a1(v, c):
        out = c.one + c.t * c.y * v[0] + c.t ** 2 * c.y * v[0] ** 2
        for k in range(3, c.order + 1):
            out = out + c.t ** k * c.x * c.y ** (k - 1) * v[0] ** k
        return out

    def thm2_a1(v, c):
        out = c.one + c.t * c.y * v[0] + c.t ** 2 * c.x * c.y * v[0] ** 2
        for k in range(3, c.order + 1):
            out = out + c.t ** k * c.y ** (k - 1) * v[0] ** k
        return out

    assert fixed_point_solve([thm1_a1], order)[0].poly == \
        catalog.solve_system("thm1", order)["A1"].poly
    assert fixed_point_solve([thm2_a1], order)[0].poly == \
        catalog.solve_system("thm2", order)["A1"].poly


def test_thm4_thm6_raw_sums():
    order = 6

    def thm4_a(v, c):
        q = c.y * (v[0] - 1) + 1
        out = c.one + c.t * q
        for k in range(2, c.order + 1):
            out = out + c.t ** k * c.x ** (k - 2) * q ** k
        return out

    def thm6_a(v, c):
        q = c.y * (v[0] - 1) + 1
        out = c.one + c.t * q
        for k in range(2, c.order + 1):
            out = out + c.t ** k * (c.x * c.y * (v[0] - 1) + 1) * q ** (k - 1)
        return out

    assert fixed_point_solve([thm4_a], order)[0].poly == \
        catalog.solve_catalog("thm4", order).poly
    assert fixed_point_solve([thm6_a], order)[0].poly == \
        catalog.solve_catalog("thm6", order).poly


def test_family_raw_sums():
    order = 7
    for m in (2, 3, 4):
        def b123(v, c, m=m):
            out = c.const(0)
            for k in range(0, c.order + 1):
                marked = c.x if k >= m else c.one
                out = out + marked * c.t ** k * v[0] ** k
            return out

        assert fixed_point_solve([b123], order)[0].poly == \
            catalog.solve_catalog("fam_123_1m2", order, m=m).poly

        def b132(v, c, m=m):
            out = c.const(0)
            for k in range(0, c.order + 1):
                marked = c.x ** (k - m + 1) if k >= m else c.one
                out = out + marked * c.t ** k * v[0] ** k
            return out

        assert fixed_point_solve([b132], order)[0].poly == \
            catalog.solve_catalog("fam_132_1m", order, m=m).poly


# -- solutions against the oracle, small ------------------------------------------

THEOREM_TRACKING = {
    "thm1": ((1, 2, 3), [(1, 3, 2)]),
    "thm2": ((1, 2, 3), [(2, 3, 1)]),
    "thm3": ((1, 2, 3), [(3, 2, 1)]),
    "thm4": ((1, 3, 2), [(1, 2, 3)]),
    "thm5": ((1, 3, 2), [(2, 3, 1)]),
    "thm6": ((1, 3, 2), [(2, 1, 3)]),
    "thm8": ((1, 3, 2), [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1)]),
}


@pytest.mark.parametrize("entry_id", sorted(THEOREM_TRACKING))
def test_theorem_series_match_oracle_small(entry_id):
    lam, tracked = THEOREM_TRACKING[entry_id]
    variables = ("x",) if len(tracked) == 1 else tuple(
        f"x{i + 1}" for i in range(len(tracked)))
    s = catalog.solve_catalog(entry_id, 6)
    for n in range(7):
        want = brute_distribution(lam, tracked, n, variables=variables).poly
        assert s.t_slice(n) == want, (entry_id, n)


def test_closed_coeff_values():
    assert catalog.closed_coeff("thm1eq", 3, 1) == 1
    assert catalog.closed_coeff("thm1eq", 4, 1) == 5
    assert catalog.closed_coeff("thm4eq", 4, 1) == 4
    assert catalog.closed_coeff("thm2eq", 3, 1) == 0   # oracle gives 1
    assert catalog.closed_coeff("thm2eq", 4, 1) == 0   # oracle gives 5
    assert catalog.closed_coeff("thm5eq", 4, 1) == 4   # oracle gives 6
    assert catalog.closed_coeff("cf_132_1m_printed", 5, 1, 3) == 21  # oracle 15
    with pytest.raises(catalog.UnsupportedIndexError):
        catalog.closed_coeff("cf_123_1m2", 4, 0, 3)
    with pytest.raises(ValueError):
        catalog.closed_coeff("thm1eq", 3, 1, m=4)
    with pytest.raises(ValueError):
        catalog.closed_coeff("cf_123_1m2", 3, 1)  # m missing


def test_closed_coeff_k0_complement():
    for m in (2, 3):
        for n in range(1, 7):
            gamma = catalog.family_pattern("fam_132_1m", m)
            want = brute_distribution((1, 3, 2), [gamma], n, variables=("x",),
                                      track_des=False).poly.coefficient({})
            assert catalog.closed_coeff_k0("cf_132_1m", n, m) == want


def test_closed_coeff_can_be_fractional():
    value = catalog.closed_coeff("cf_132_1m_printed", 5, 2, 2)
    assert isinstance(value, Fraction) and value.denominator != 1


def test_reference_sequences():
    assert catalog.reference_sequence("catalan", 4) == 14
    assert catalog.reference_sequence("seq_123_231_x0", 5) == 23
    assert catalog.reference_sequence("seq_132_231_x0", 4) == 8
    assert catalog.reference_sequence("seq_132_231_x0", 0) == 1
    assert catalog.reference_sequence("seq_132_213_x0", 9) == 1223
    assert [catalog.reference_sequence("motzkin", n) for n in range(7)] == \
        [1, 1, 2, 4, 9, 21, 51]
    with pytest.raises(ValueError):
        catalog.reference_sequence("seq_123_231_x0", 9)
    with pytest.raises(ValueError):
        catalog.reference_sequence("fibonacci", 3)


def test_identity_verdicts():
    assert catalog.printed_identity_check("thm1_quadratic", 8).ok
    assert not catalog.printed_identity_check("thm1_quadratic_printed", 8).ok
    assert catalog.printed_identity_check("thm2_polynomial", 8).ok
    assert catalog.printed_identity_check("123long2", 8, m=3).ok
    assert not catalog.printed_identity_check("123long2_printed", 8, m=3).ok
    assert catalog.printed_identity_check("thm8_rational", 8).ok
    assert catalog.printed_identity_check("thm8_expansion", 5).ok
    verdict = catalog.printed_identity_check("thm7_expansion", 5)
    assert not verdict.ok
    assert verdict.witness == (3, "1", 1, 0)
    with pytest.raises(ValueError):
        catalog.printed_identity_check("nonesuch", 8)


def test_solved_series_sum_to_catalan():
    for entry_id in ("thm1", "thm5", "thm8"):
        s = catalog.solve_catalog(entry_id, 8)
        for n in range(9):
            total = sum(c for _, c in s.t_slice(n).terms())
            assert total == catalan(n)
