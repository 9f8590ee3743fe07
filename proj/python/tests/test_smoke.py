import itertools

import pytest

import spinext


def test_quadratic_forms():
    assert spinext.arf("11") == 1
    assert spinext.arf("00") == 0
    assert spinext.zero_count("0000") == 10
    assert spinext.eval("00", "11") == 1
    matrix, standard = spinext.reduce_to_standard("0110")
    assert standard == spinext.standard_form(2, spinext.arf("0110"))
    assert spinext.is_symplectic(matrix)
    assert spinext.pullback(standard, matrix) == "0110"


def test_counts_are_python_ints():
    assert spinext.count_formula(3) == (36, 28)
    b, u = spinext.count_formula(100)
    assert b - u == 2**100
    assert b + u == 2**200
    assert spinext.count_recurrence(3) == [(3, 1), (10, 6), (36, 28)]
    b, u = spinext.enumerate_spin(2)
    assert (len(b), len(u)) == (10, 6)


def test_group_order():
    assert spinext.group_order(3) == 1451520
    assert spinext.group_order(6) == 2**36 * 3 * 15 * 63 * 255 * 1023 * 4095


def test_orbits_and_witnesses():
    assert spinext.spin_orbit("00") == ["00", "01", "10"]
    assert [len(o) for o in spinext.orbit_partition(3)] == [36, 28]
    m = spinext.transitivity_witness("000000", "110011")
    assert spinext.pullback("000000", m) == "110011"
    w = spinext.no_extension_witness(1)
    assert w["matrix"] == ["01", "11"]
    assert w["seed"] is None
    assert spinext.no_extension_witness(2)["fixed_bounding_count"] == 0
    c = spinext.counting_bound_check(2)
    assert (c["lhs"], c["order"], c["ok"]) == (711, 720, True)
    assert spinext.index_lower_bound_surface("000000") == 36


def test_torus():
    assert len(spinext.torus_orbit("100")) == 7
    assert spinext.torus_orbit("000") == ["000"]
    assert spinext.index_lower_bound_torus("10000") == 31
    assert spinext.modular_image_order(3) == 168
    assert spinext.dehn_twist_matrix(2, 1, 2) == ["10", "11"]
    assert spinext.t3_signature_gate(0) == ("BoundApplies", 7)
    assert spinext.t3_signature_gate(8) == ("Indeterminate", None)
    assert spinext.t3_signature_gate(4)[0] == "InvalidSignature"


def test_permutation_groups():
    s3 = spinext.enumerate_group([[1, 2, 0], [1, 0, 2]], 3)
    assert sorted(s3) == sorted(list(p) for p in itertools.permutations(range(3)))
    assert spinext.semidirect_index_check([[1, 2, 0]], [[1, 0, 2]], [[1, 0, 2]], [[1, 2, 0], [1, 0, 2]], 3) == (
        3,
        3,
        True,
    )


def test_errors_map_to_python_exceptions():
    with pytest.raises(spinext.ParseError):
        spinext.arf("101")
    with pytest.raises(spinext.PreconditionFailed):
        spinext.transitivity_witness("00", "11")
    with pytest.raises(spinext.BudgetExceeded):
        spinext.no_extension_witness(2, budget=0)
    with pytest.raises(spinext.SpinextError):
        spinext.dehn_twist_matrix(2, 1, 1)
    with pytest.raises(spinext.DimensionMismatch):
        spinext.eval("00", "0000")
