"""Hopf structure constants, actions, faithfulness, and the group verdict."""

import pytest

from etalelab.catalog import get_action, get_algebra, get_hopf
from etalelab.convolution import ConvolutionAlgebra
from etalelab.diagrams import Mor
from etalelab.errors import (MultiplicativityFailure, NotCommutative,
                             SchemaError, ShapeMismatch)
from etalelab.hopf import (ActionData, action_to_doc, check_faithful,
                           dual_hopf, gamma_map, group_algebra, grouplikes,
                           hopf_to_doc, kac_paljutkin, load_action, load_hopf,
                           no_go_report, solve_antipode, validate_action,
                           validate_hopf)
from etalelab.linalg import ScalarMatrix
from etalelab.scalars import ONE, ZERO, rat


def test_catalog_hopf_algebras_validate():
    for name in ("kz2", "kz4", "ks3", "fs3", "h8"):
        ok, witness = validate_hopf(get_hopf(name))
        assert ok, (name, witness)


def test_kac_paljutkin_is_neither_commutative_nor_cocommutative():
    h8 = get_hopf("h8")
    assert h8.dim == 8
    assert not h8.is_commutative()
    assert not h8.is_cocommutative()
    ok, witness = validate_hopf(dual_hopf(h8))
    assert ok, witness


def test_group_algebra_dual_is_function_algebra():
    kz2 = get_hopf("kz2")
    dual = dual_hopf(kz2)
    # functions on Z/2: pointwise product on delta functions
    e0 = [ONE, ZERO]
    assert dual.product(e0, e0) == e0
    assert dual.product(e0, [ZERO, ONE]) == [ZERO, ZERO]
    assert dual.is_commutative()


def test_hopf_document_roundtrip_and_rejection():
    h8 = get_hopf("h8")
    doc = hopf_to_doc(h8)
    back = load_hopf(doc)
    assert back.mult == h8.mult
    assert back.comult == h8.comult
    bad = hopf_to_doc(h8)
    bad["antipode"][0][0] = 5
    with pytest.raises(SchemaError):
        load_hopf(bad)
    with pytest.raises(SchemaError):
        load_hopf({"dim": 2, "basis": ["a", "b"]})


def test_monoid_bialgebra_has_no_antipode():
    # 1, p with p^2 = p and p grouplike: a bialgebra, not Hopf
    mult = [[[ONE, ZERO], [ZERO, ONE]], [[ZERO, ONE], [ZERO, ONE]]]
    comult = [
        [[ONE if j == 0 and k == 0 else ZERO for k in range(2)]
         for j in range(2)],
        [[ONE if j == 1 and k == 1 else ZERO for k in range(2)]
         for j in range(2)],
    ]
    with pytest.raises(SchemaError):
        solve_antipode("monoid", ["1", "p"], mult, [ONE, ZERO], comult,
                       [ONE, ONE])


def test_grouplikes_of_group_algebras_are_the_basis():
    kz2 = get_hopf("kz2")
    gls = grouplikes(kz2)
    assert sorted(gls, key=repr) == sorted(
        ([ONE, ZERO], [ZERO, ONE]), key=repr)
    ks3 = get_hopf("ks3")
    gls = grouplikes(ks3)
    assert len(gls) == 6
    # closed under the product
    for g1 in gls:
        for g2 in gls:
            assert ks3.product(g1, g2) in gls


def test_grouplikes_require_cocommutativity():
    with pytest.raises(NotCommutative):
        grouplikes(get_hopf("h8"))
    with pytest.raises(NotCommutative):
        grouplikes(get_hopf("fs3"))


def test_action_shape_checks():
    a = get_algebra("k-z2")
    kz2 = get_hopf("kz2")
    with pytest.raises(ShapeMismatch):
        ActionData(kz2, a, [Mor.identity(a.obj)])


def test_invalid_action_is_rejected_with_witness():
    a = get_algebra("k-z2")
    kz2 = get_hopf("kz2")
    doubled = Mor(a.obj, a.obj,
                  ScalarMatrix([[rat(2), ZERO], [ZERO, rat(-2)]]))
    act = ActionData(kz2, a, [Mor.identity(a.obj), doubled])
    ok, witnesses = validate_action(act)
    assert not ok and witnesses
    report = no_go_report(act)
    assert report["verdict"] == "InvalidAction"


def test_catalog_actions_validate():
    for name in ("kz2-on-k-z2", "kz4-on-k-z2", "ks3-on-rep-s3-regular",
                 "h8-on-k-v4"):
        ok, witnesses = validate_action(get_action(name))
        assert ok, (name, witnesses)


def test_faithfulness_kernels():
    assert check_faithful(get_action("kz2-on-k-z2")) == []
    assert len(check_faithful(get_action("kz4-on-k-z2"))) == 2
    assert check_faithful(get_action("ks3-on-rep-s3-regular")) == []
    assert len(check_faithful(get_action("h8-on-k-v4"))) == 4


def test_gamma_map_on_faithful_group_actions():
    for name, dim in (("kz2-on-k-z2", 2), ("ks3-on-rep-s3-regular", 6)):
        act = get_action(name)
        Q = ConvolutionAlgebra(act.algebra)
        gamma = gamma_map(act, Q)
        assert gamma["rank"] == dim


def test_gamma_multiplicativity_failure_is_detected():
    a = get_algebra("k-z2")
    kz2 = get_hopf("kz2")
    doubled = Mor(a.obj, a.obj,
                  ScalarMatrix([[rat(2), ZERO], [ZERO, rat(-2)]]))
    act = ActionData(kz2, a, [Mor.identity(a.obj), doubled])
    with pytest.raises(MultiplicativityFailure):
        gamma_map(act, ConvolutionAlgebra(a))


def test_no_go_verdicts():
    rep = no_go_report(get_action("kz2-on-k-z2"))
    assert rep["verdict"] == "GroupAction"
    assert rep["group"] == "Z/2"
    assert rep["grouplikes_are_automorphisms"]

    rep = no_go_report(get_action("ks3-on-rep-s3-regular"))
    assert rep["verdict"] == "GroupAction"
    assert rep["group"] == "S3"
    assert rep["gamma_rank"] == 6

    rep = no_go_report(get_action("kz4-on-k-z2"))
    assert rep["verdict"] == "NotFaithful"
    assert rep["kernel_dim"] == 2
    assert rep["faithful_quotient_dim"] == 2

    rep = no_go_report(get_action("h8-on-k-v4"))
    assert rep["verdict"] == "NotFaithful"
    assert rep["kernel_dim"] == 4
    assert rep["faithful_quotient_dim"] == 4
    assert not rep["cocommutative"]


def test_action_document_roundtrip():
    act = get_action("kz2-on-k-z2")
    doc = action_to_doc(act)
    back = load_action(act.hopf, act.algebra, doc)
    assert all(x == y for x, y in zip(act.images, back.images))
    with pytest.raises(SchemaError):
        load_action(act.hopf, act.algebra, {"images": [{"bad": 1}]})


def test_custom_group_table_validates():
    # Z/3 built directly from its table
    table = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    h = group_algebra(table, ["1", "g", "g2"], "k[Z/3]")
    ok, witness = validate_hopf(h)
    assert ok, witness
    assert len(grouplikes(h)) == 3


def test_kac_paljutkin_relations():
    h8 = kac_paljutkin()
    # z^2 = (1 + x + y - xy)/2 and zx = yz in the monomial basis
    half = rat(1) / rat(2)
    z, x, y, xy = 1, 4, 2, 6  # indices: x^a y^b z^c at a*4 + b*2 + c
    e = [[ONE if i == k else ZERO for k in range(8)] for i in range(8)]
    zsq = h8.product(e[z], e[z])
    expect = [ZERO] * 8
    expect[0], expect[x], expect[y], expect[xy] = half, half, half, -half
    assert zsq == expect
    assert h8.product(e[z], e[x]) == h8.product(e[y], e[z])
