import pytest

from patlab import dyck, perms
from patlab.series import catalan

PAPER_PATH = "DDRDDRRRDDRDRDRRDR"


def test_parse_path():
    assert dyck.parse_path("DR") == "DR"
    assert dyck.parse_path(PAPER_PATH) == PAPER_PATH
    assert dyck.parse_path("") == ""
    with pytest.raises(dyck.InvalidPathError) as err:
        dyck.parse_path("RD")
    assert err.value.index == 0
    with pytest.raises(dyck.InvalidPathError) as err:
        dyck.parse_path("DRR")
    with pytest.raises(dyck.InvalidPathError) as err:
        dyck.parse_path("DXDR")
    assert err.value.index == 1


def test_path_statistics():
    assert dyck.first_return(PAPER_PATH) == 4
    assert dyck.first_return("DR") == 1
    assert dyck.first_return("DDRR") == 2
    with pytest.raises(ValueError):
        dyck.first_return("")
    assert dyck.horizontal_segments(PAPER_PATH) == [1, 3, 1, 1, 2, 1]
    assert dyck.horizontal_segments("DR") == [1]
    assert dyck.horizontal_segments("DDRR") == [2]
    assert dyck.horizontal_segments("") == []
    assert dyck.peaks(PAPER_PATH) == 6
    assert dyck.peaks("DR") == 1
    assert dyck.peaks("DRDR") == 2
    assert dyck.peaks("") == 0


def test_path_pattern_count():
    assert dyck.path_pattern_count(PAPER_PATH, "DRRR") == 1
    assert dyck.path_pattern_count(PAPER_PATH, "DRRD") == 1
    assert dyck.path_pattern_count("DDRR", "DRRD", extended=True) == 1
    assert dyck.path_pattern_count("DDRR", "DRRD") == 0
    assert dyck.path_pattern_count("RRRR", "RRR") == 2  # overlaps count
    with pytest.raises(ValueError):
        dyck.path_pattern_count("DR", "")


def test_staircase_maps_paper_examples():
    assert dyck.phi_map(perms.parse_perm("867943251")) == PAPER_PATH
    assert dyck.psi_map(perms.parse_perm("869743251")) == PAPER_PATH
    assert dyck.phi_map((1,)) == "DR"
    assert dyck.psi_map((1,)) == "DR"
    assert dyck.phi_map(perms.parse_perm("42351")) == "DDRDDRRRDR"
    assert dyck.phi_inverse(PAPER_PATH) == perms.parse_perm("867943251")
    assert dyck.psi_inverse(PAPER_PATH) == perms.parse_perm("869743251")
    with pytest.raises(ValueError):
        dyck.phi_map((1, 3, 2))
    with pytest.raises(ValueError):
        dyck.psi_map((1, 2, 3))


def test_roundtrips_exhaustive():
    for n in range(9):
        for p in perms.avoider_list((1, 3, 2), n):
            assert dyck.phi_inverse(dyck.phi_map(p)) == p
        for p in perms.avoider_list((1, 2, 3), n):
            assert dyck.psi_inverse(dyck.psi_map(p)) == p
        for w in dyck.enumerate_paths(n):
            assert dyck.phi_map(dyck.phi_inverse(w)) == w
            assert dyck.psi_map(dyck.psi_inverse(w)) == w


def test_pattern_path_examples():
    g = perms.parse_perm("42351")
    assert dyck.pattern_path(g, "phi_prime") == "RDDRRRDR"
    assert dyck.pattern_path(g, "phi_double_prime") == "RDDRRRD"
    assert dyck.pattern_path((1, 2, 3), "phi_prime") == "RRR"
    assert dyck.pattern_path((2, 1, 3), "phi_prime") == "RDRR"
    assert dyck.pattern_path((2, 3, 1), "phi_double_prime") == "RRD"
    assert dyck.pattern_path((2, 1), "phi_double_prime") == "RD"
    assert dyck.pattern_path((1,), "phi_prime") == "R"
    with pytest.raises(ValueError):
        dyck.pattern_path((1, 3, 2), "phi_prime")  # contains 132
    with pytest.raises(ValueError):
        dyck.pattern_path((1, 2, 3), "phi_double_prime")  # must end max,1
    with pytest.raises(ValueError):
        dyck.pattern_path((2, 1), "phi")


def test_admissible_variant():
    assert dyck.admissible_variant((1, 2, 3)) == "phi_prime"
    assert dyck.admissible_variant((2, 3, 1)) == "phi_double_prime"
    assert dyck.admissible_variant((3, 2, 1)) is None
    assert dyck.admissible_variant((1,)) == "phi_prime"


def test_enumerate_paths():
    assert list(dyck.enumerate_paths(2)) == ["DDRR", "DRDR"]
    assert list(dyck.enumerate_paths(0)) == [""]
    for n in range(8):
        paths = list(dyck.enumerate_paths(n))
        assert paths == sorted(paths)
        assert len(paths) == catalan(n)
    with pytest.raises(perms.EnumerationLimitError):
        next(dyck.enumerate_paths(15))


def test_segment_sum_and_return_bounds():
    for n in range(7):
        for w in dyck.enumerate_paths(n):
            assert sum(dyck.horizontal_segments(w)) == n
            if n >= 1:
                assert 1 <= dyck.first_return(w) <= n
                assert dyck.peaks(w) >= 1


def test_statistic_transport_examples():
    # Descents map to RD under the 132-side, RD+RRR under the 123-side.
    for n in range(8):
        for p in perms.avoider_list((1, 3, 2), n):
            w = dyck.phi_map(p)
            assert perms.descents(p) == dyck.path_pattern_count(w, "RD")
            assert perms.consecutive_matches(p, (1, 2, 3))[1] == \
                dyck.path_pattern_count(w, "RRR")
        for p in perms.avoider_list((1, 2, 3), n):
            w = dyck.psi_map(p)
            assert perms.descents(p) == (dyck.path_pattern_count(w, "RD")
                                         + dyck.path_pattern_count(w, "RRR"))
            assert perms.consecutive_matches(p, (1, 3, 2))[1] == \
                dyck.path_pattern_count(w, "DRRR")
            assert perms.consecutive_matches(p, (2, 3, 1))[1] == \
                dyck.path_pattern_count(w, "DRRD")


def test_peaks_equal_left_to_right_minima():
    for n in range(7):
        for p in perms.avoider_list((1, 3, 2), n):
            minima = sum(1 for i in range(n) if all(p[j] > p[i] for j in range(i)))
            assert dyck.peaks(dyck.phi_map(p)) == minima
