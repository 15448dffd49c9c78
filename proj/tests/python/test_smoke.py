import json

import pytest

import matcat


@pytest.fixture(scope="module")
def h4():
    return matcat.build_h4()


def test_h4_validates(h4):
    rep = matcat.validate(h4, jobs=2)
    assert rep["ok"]
    assert rep["violations"] == 0
    pent = [e for e in rep["entries"] if e["check"] == "associator.pentagon"]
    assert pent[0]["instances"] == 256


def test_basis_and_semisimplicity(h4):
    assert h4.dim == 10 and h4.rank == 4
    assert "x43x32" in h4.basis
    assert not matcat.is_semisimple(h4)
    assert matcat.is_semisimple(matcat.vec_z2())


def test_objects_and_green_ring(h4):
    assert matcat.tensor_obj(h4, [0, 1, 0, 0], [0, 1, 0, 0]) == [0, 1, 0, 1]
    assert matcat.green_ring(h4, "(r1+r2+r3+r4)^2") == [2, 8, 2, 8]
    with pytest.raises(ValueError):
        matcat.green_ring(h4, "r7")


def test_kernel_and_cokernel(h4):
    obj, k = matcat.kernel(h4, h4.basis_matrix("x32"))
    assert obj == [1, 0, 0, 0]
    assert json.loads(k) == json.loads(h4.basis_matrix("x21"))
    obj, c = matcat.cokernel(h4, h4.basis_matrix("x21"))
    assert obj == [0, 0, 1, 0]
    x1, x2 = matcat.factor(h4, h4.basis_matrix("x32"))
    assert json.loads(matcat.compose(h4, x1, x2)) == json.loads(h4.basis_matrix("x32"))


def test_interchange_on_basis(h4):
    x, y = h4.basis_matrix("x21"), h4.basis_matrix("x32")
    lhs = matcat.compose(h4, matcat.tensor_mor(h4, y, y), matcat.tensor_mor(h4, x, x))
    rhs = matcat.tensor_mor(h4, matcat.compose(h4, y, x), matcat.compose(h4, y, x))
    assert json.loads(lhs) == json.loads(rhs)


def test_json_round_trip(h4):
    text = h4.to_json()
    again = matcat.Quadruple.from_json(text)
    assert again.to_json() == text
    with pytest.raises(ValueError):
        matcat.Quadruple.from_json('{"field": "Q"}')


def test_equivalences(h4):
    scales = ["1"] * 16
    scales[5] = "-1"
    scales[6] = "2/3"
    q2, eta = matcat.build_h4_regauged(scales)
    assert matcat.check_eta_equiv(h4, q2, eta)["ok"]
    triv, sign = matcat.vec_z2(False), matcat.vec_z2(True)
    rep = matcat.check_eta_equiv(triv, sign, matcat.identity_eta(triv))
    assert not rep["ok"]
    assert [e["locus"] for e in rep["entries"] if e["status"] == "fail"][0] == [2, 2, 2]
    q3, w = matcat.relabel(h4, [0, 3, 2, 1])
    assert matcat.check_tensor_equiv(h4, q3, w)["ok"]


def test_associator_unit_middle(h4):
    a = json.loads(matcat.assoc(h4, [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]))
    assert a["row_type"] == a["col_type"] == [0, 1, 0, 1]
    diag = {(b["i"], b["j"]): b["entries"] for b in a["blocks"]}
    assert diag == {(1, 1): [[[["1", 1]]]], (3, 3): [[[["1", 3]]]]}
