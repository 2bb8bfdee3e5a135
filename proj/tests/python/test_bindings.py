import pytest

import qdesc

CURVE1 = [0, 1, 0, -1, 0, -1, 0, -1, 0, 1, 0, 1, 0, 0, 0]
CURVE2 = [0, 0, -1, 1, 0, -2, -1, 0, 0, -1, 0, 0, 1, 1, 0]
CURVE4 = [1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 1, 0, -1, 0, 1]


def test_discriminants():
    assert qdesc.discriminant(CURVE1) == 4727
    assert qdesc.discriminant(CURVE4) == -(2**8) * 5**2 * 1361 * 97103


def test_point_counts():
    assert qdesc.l_polynomial(CURVE1, 3)["JPoints"] == "51"
    assert qdesc.count_points(CURVE2, 3) == 7
    assert qdesc.torsion_bound(CURVE2, [2, 3]) == 1


def test_bitangents():
    b = qdesc.bitangents(CURVE1, 5)
    assert len(b["lines"]) == 28
    assert b["splittingDegree"] == 8
    assert qdesc.syzygetic_count(CURVE1, 5) == 315


def test_errors_carry_codes():
    with pytest.raises(qdesc.QdescError) as e:
        qdesc.bitangents(CURVE1, 29)
    assert e.value.args[0] == "domain"
    with pytest.raises(qdesc.QdescError) as e:
        qdesc.discriminant(CURVE1[:3])
    assert e.value.args[0] == "parse"


def test_groups_and_modules():
    assert qdesc.sigma_count(3) == (28, 315, 315)
    ev = qdesc.even_form_stabilizer()
    assert qdesc.group_order(ev) == 40320
    row = qdesc.fixed_row(ev)
    assert (row["J2"], row["Edual"], row["Rdual"]) == (0, 0, 1)
    g56 = qdesc.search_subgroup(ev, 56)
    assert g56 is not None and int(g56["order"]) == 56
    assert qdesc.sha1_bound(ev, "Rdual") == (0, 2)
    assert qdesc.h1_dim(qdesc.sp6_group(), "J2") == 1
    assert qdesc.rank_bound(3, 2, 0, 3) == (5, 3)
