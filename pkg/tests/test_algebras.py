"""Tests for internal algebras: axioms, separability data, etale verdicts,
and document round-trips."""

import json
import os

import pytest

from etalelab.algebras import (AlgebraObj, algebra_to_doc, check_associative,
                               check_commutative, check_connected,
                               check_unital, compute_separability,
                               counit_diagram, frobenius_gram, is_etale,
                               load_algebra, object_from_multiset,
                               pointed_subgroup_algebra, trivial_algebra,
                               unit_component)
from etalelab.diagrams import Mor, Obj, tensor_obj, unit_obj
from etalelab.errors import NotConnected, SchemaError
from etalelab.fusion import load_category, pointed_category
from etalelab.linalg import ScalarMatrix, rank
from etalelab.scalars import rat, zeta

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "etalelab", "data")


def load_data(name):
    with open(os.path.join(DATA, name)) as f:
        return load_category(json.load(f))


REP_Z2 = pointed_category([2], {(0,): rat(1), (1,): rat(1)}, name="rep-z2")
TORIC = pointed_category(
    [2, 2],
    {(0, 0): rat(1), (1, 0): rat(1), (0, 1): rat(1), (1, 1): rat(-1)},
    {(0, 0): "1", (1, 0): "e", (0, 1): "m", (1, 1): "f"}, name="toric-code")
ISING = load_data("ising.json")
SEMION = pointed_category([2], {(0,): rat(1), (1,): zeta(4)}, name="semion")


def k_z2():
    return pointed_subgroup_algebra(REP_Z2, ["0", "1"], name="k(Z/2)")


def test_trivial_algebra_is_etale():
    for cat in (REP_Z2, TORIC, ISING):
        report = is_etale(trivial_algebra(cat))
        assert report["etale"]
        eps, mdual, d, unique = compute_separability(trivial_algebra(cat))
        assert d == rat(1)
        assert unique


def test_k_z2_axioms():
    a = k_z2()
    assert check_associative(a) == (True, None)
    assert check_unital(a)
    assert check_commutative(a) == (True, None)
    assert check_connected(a)


def test_k_z2_separability_oracle():
    # hand oracle: eps = (2, 0), coproduct(1) = (1x1 + s x s)/2
    a = k_z2()
    eps, mdual, d, unique = compute_separability(a)
    assert d == rat(2)
    assert unique
    assert eps.mat.data[0][0] == rat(2)
    assert eps.mat.data[0][1] == rat(0)
    half = rat(1) / rat(2)
    # fusion basis of A(x)A: (0,0,0,.), (0,1,1,.), (1,0,1,.), (1,1,0,.)
    expected = ScalarMatrix([[half, rat(0)], [rat(0), half],
                             [rat(0), half], [half, rat(0)]])
    assert mdual.mat == expected
    assert a.mult @ mdual == Mor.identity(a.obj)


def test_counit_diagram_normalisation():
    for alg in (k_z2(),
                pointed_subgroup_algebra(TORIC, ["1", "e"], name="1+e")):
        eps = counit_diagram(alg)
        assert (eps @ alg.unit).mat.data[0][0] == alg.dim


def test_toric_code_etale_verdicts():
    good = pointed_subgroup_algebra(TORIC, ["1", "e"], name="1+e")
    assert is_etale(good)["etale"]
    bad = pointed_subgroup_algebra(TORIC, ["1", "f"], name="1+f")
    ok, witness = check_commutative(bad)
    assert not ok
    assert witness == ("f", "f", "1")
    report = is_etale(bad)
    assert not report["etale"]
    assert report["commutativity_witness"] == ["f", "f", "1"]


def test_ising_fermion_not_commutative():
    cat = ISING
    obj = Obj(cat, [0, cat.index["p"]])
    from etalelab.diagrams import fusion_basis
    basis = fusion_basis(cat, obj, obj)
    mat = ScalarMatrix.zeros(2, len(basis))
    for k, (i, j, c, _mu) in enumerate(basis):
        mat.data[0 if c == 0 else 1][k] = rat(1)
    umat = ScalarMatrix([[rat(1)], [rat(0)]])
    a = AlgebraObj(cat, obj, Mor(tensor_obj(obj, obj), obj, mat),
                   Mor(unit_obj(cat), obj, umat), name="1+p")
    assert check_associative(a) == (True, None)
    ok, _ = check_commutative(a)
    assert not ok


def test_semion_group_algebra_not_associative():
    a = pointed_subgroup_algebra(SEMION, ["0", "1"])
    ok, witness = check_associative(a)
    assert not ok and witness is not None


def test_cocommutativity_flag():
    report = is_etale(pointed_subgroup_algebra(TORIC, ["1", "e"], name="1+e"))
    assert report["cocommutative"]


def test_unit_component():
    a = k_z2()
    assert unit_component(a.unit, a) == rat(1)
    assert unit_component(a.unit.scale(rat(3)), a) == rat(3)
    eps, _, d, _ = compute_separability(a)
    assert unit_component(a.unit @ eps @ a.unit, a) == d


def test_unit_component_requires_connected():
    cat = REP_Z2
    obj = Obj(cat, [0, 0])
    from etalelab.diagrams import fusion_basis
    basis = fusion_basis(cat, obj, obj)
    mat = ScalarMatrix.zeros(2, len(basis))
    for k, (i, j, c, _mu) in enumerate(basis):
        if i == j:
            mat.data[i][k] = rat(1)
    umat = ScalarMatrix([[rat(1)], [rat(1)]])
    a = AlgebraObj(cat, obj, Mor(tensor_obj(obj, obj), obj, mat),
                   Mor(unit_obj(cat), obj, umat), name="k x k")
    assert not check_connected(a)
    assert not is_etale(a)["etale"]
    with pytest.raises(NotConnected):
        unit_component(a.unit, a)


def test_frobenius_gram_nondegenerate():
    for alg in (k_z2(), trivial_algebra(TORIC),
                pointed_subgroup_algebra(TORIC, ["1", "e"], name="1+e")):
        gram = frobenius_gram(alg)
        assert rank(gram) == len(alg.obj)


def test_algebra_document_roundtrip():
    a = pointed_subgroup_algebra(TORIC, ["1", "e"], name="1+e")
    doc = algebra_to_doc(a)
    b = load_algebra(TORIC, json.loads(json.dumps(doc)))
    assert b.mult == a.mult and b.unit == a.unit and b.obj == a.obj
    assert algebra_to_doc(b) == doc


def test_algebra_document_errors():
    a = k_z2()
    doc = algebra_to_doc(a)
    bad = json.loads(json.dumps(doc))
    bad["mult"][0]["to"] = ["1", 0]
    with pytest.raises(SchemaError):
        load_algebra(REP_Z2, bad)
    bad = json.loads(json.dumps(doc))
    del bad["unit"]
    with pytest.raises(SchemaError):
        load_algebra(REP_Z2, bad)


def test_object_from_multiset_order():
    obj = object_from_multiset(TORIC, {"e": 2, "1": 1})
    assert obj.simples == [0, TORIC.index["e"], TORIC.index["e"]]
