"""Built-in catalog of categories, algebras, Hopf fixtures, and actions.

Pointed categories are generated from (group, quadratic form); Rep(S3),
Fibonacci, and Ising ship as checked-in documents.  Every entry validates
at build time; `selftest` runs all validators.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .algebras import (AlgebraObj, is_etale, pointed_subgroup_algebra,
                       trivial_algebra)
from .diagrams import Mor
from .errors import CatalogSelfTestFailure, EtaleLabError, SchemaError
from .fusion import Category, load_category, pointed_category, validate_category
from .hopf import (ActionData, HopfData, function_algebra, group_algebra,
                   kac_paljutkin, validate_action, validate_hopf)
from .linalg import ScalarMatrix
from .repgen import rep_s3_translations
from .scalars import ONE, rat, zeta


class CatalogEntry:
    """A named catalog item with a lazy builder and a provenance note."""

    def __init__(self, name: str, kind: str, builder, provenance: str) -> None:
        self.name = name
        self.kind = kind
        self.builder = builder
        self.provenance = provenance

    def build(self):
        return self.builder()

    def __repr__(self):
        return f"CatalogEntry({self.name!r}, kind={self.kind!r})"


def _data_doc(filename: str) -> dict:
    text = resources.files("etalelab.data").joinpath(filename).read_text()
    return json.loads(text)


# -- categories ----------------------------------------------------------------


def _rep_zn(n: int) -> Category:
    return pointed_category([n], {(i,): rat(1) for i in range(n)},
                            name=f"rep-z{n}")


def _rep_z2z2() -> Category:
    q = {(i, j): rat(1) for i in range(2) for j in range(2)}
    return pointed_category([2, 2], q, name="rep-z2z2")


def _semion() -> Category:
    return pointed_category([2], {(0,): rat(1), (1,): zeta(4)}, name="semion")


def _toric() -> Category:
    q = {(0, 0): rat(1), (0, 1): rat(1), (1, 0): rat(1), (1, 1): rat(-1)}
    names = {(0, 0): "1", (0, 1): "e", (1, 0): "m", (1, 1): "f"}
    return pointed_category([2, 2], q, names, name="toric-code")


_CATEGORY_BUILDERS = {
    "rep-z2": lambda: _rep_zn(2),
    "rep-z3": lambda: _rep_zn(3),
    "rep-z4": lambda: _rep_zn(4),
    "rep-z2z2": _rep_z2z2,
    "semion": _semion,
    "toric-code": _toric,
    "rep-s3": lambda: load_category(_data_doc("rep-s3.json")),
    "fibonacci": lambda: load_category(_data_doc("fibonacci.json")),
    "ising": lambda: load_category(_data_doc("ising.json")),
}


@lru_cache(maxsize=None)
def get_category(name: str) -> Category:
    if name not in _CATEGORY_BUILDERS:
        raise SchemaError(f"unknown catalog category {name!r}")
    return _CATEGORY_BUILDERS[name]()


# -- algebras ------------------------------------------------------------------


def _load_regular() -> AlgebraObj:
    from .algebras import load_algebra
    return load_algebra(get_category("rep-s3"), _data_doc("rep-s3-regular.json"),
                        name="rep-s3-regular")


_ALGEBRA_BUILDERS = {
    "k-z2": lambda: pointed_subgroup_algebra(get_category("rep-z2"),
                                             ["0", "1"], name="k(Z/2)"),
    "k-z4": lambda: pointed_subgroup_algebra(get_category("rep-z4"),
                                             ["0", "1", "2", "3"],
                                             name="k(Z/4)"),
    "k-v4": lambda: pointed_subgroup_algebra(
        get_category("rep-z2z2"), list(get_category("rep-z2z2").simples),
        name="k(V4)"),
    "one-plus-e": lambda: pointed_subgroup_algebra(get_category("toric-code"),
                                                   ["1", "e"], name="1+e"),
    "one-plus-m": lambda: pointed_subgroup_algebra(get_category("toric-code"),
                                                   ["1", "m"], name="1+m"),
    "rep-s3-regular": _load_regular,
}
for _cname in _CATEGORY_BUILDERS:
    _ALGEBRA_BUILDERS[f"trivial-{_cname}"] = (
        lambda c=_cname: trivial_algebra(get_category(c)))


@lru_cache(maxsize=None)
def get_algebra(name: str) -> AlgebraObj:
    if name not in _ALGEBRA_BUILDERS:
        raise SchemaError(f"unknown catalog algebra {name!r}")
    return _ALGEBRA_BUILDERS[name]()


def algebra_category_name(name: str) -> str:
    """The catalog category an algebra entry lives in."""
    if name.startswith("trivial-"):
        return name[len("trivial-"):]
    return {"k-z2": "rep-z2", "k-z4": "rep-z4", "k-v4": "rep-z2z2",
            "one-plus-e": "toric-code", "one-plus-m": "toric-code",
            "rep-s3-regular": "rep-s3"}[name]


# -- Hopf fixtures --------------------------------------------------------------


def _zn_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _s3_table():
    from .repgen import _compose, _elements
    els = _elements()
    return [[els.index(_compose(p, q)) for q in els] for p in els]


_HOPF_BUILDERS = {
    "kz2": lambda: group_algebra(_zn_table(2), ["1", "g"], "k[Z/2]"),
    "kz4": lambda: group_algebra(_zn_table(4), ["1", "g", "g2", "g3"],
                                 "k[Z/4]"),
    "ks3": lambda: group_algebra(_s3_table(),
                                 [f"g{i}" for i in range(6)], "k[S3]"),
    "fs3": lambda: function_algebra(_s3_table(),
                                    [f"d{i}" for i in range(6)], "k(S3)"),
    "h8": kac_paljutkin,
}


@lru_cache(maxsize=None)
def get_hopf(name: str) -> HopfData:
    if name not in _HOPF_BUILDERS:
        raise SchemaError(f"unknown catalog Hopf algebra {name!r}")
    return _HOPF_BUILDERS[name]()


# -- actions --------------------------------------------------------------------


def _sign_mor(a: AlgebraObj, signs) -> Mor:
    mat = ScalarMatrix.zeros(len(a.obj), len(a.obj))
    for i, s in enumerate(signs):
        mat.data[i][i] = rat(s)
    return Mor(a.obj, a.obj, mat)


def _act_kz2_on_kz2() -> ActionData:
    a = get_algebra("k-z2")
    return ActionData(get_hopf("kz2"), a,
                      [Mor.identity(a.obj), _sign_mor(a, [1, -1])],
                      name="kz2-on-k-z2")


def _act_kz4_on_kz2() -> ActionData:
    # the Z/4 generator acts through the Z/2 quotient
    a = get_algebra("k-z2")
    ident = Mor.identity(a.obj)
    flip = _sign_mor(a, [1, -1])
    return ActionData(get_hopf("kz4"), a, [ident, flip, ident, flip],
                      name="kz4-on-k-z2")


def _act_ks3_on_regular() -> ActionData:
    a = get_algebra("rep-s3-regular")
    mors, _table = rep_s3_translations(a)
    return ActionData(get_hopf("ks3"), a, mors, name="ks3-on-rep-s3-regular")


def _act_h8_on_kv4() -> ActionData:
    """The Kac-Paljutkin algebra acting on k(V4) through its 4-dimensional
    group-algebra quotient (x and y are identified)."""
    a = get_algebra("k-v4")
    els = [(i, j) for i in range(2) for j in range(2)]

    def char_mor(u) -> Mor:
        return _sign_mor(a, [(-1) ** (u[0] * v[0] + u[1] * v[1])
                             for v in els])

    half = rat(1) / rat(2)
    i4 = zeta(4)
    x_img = char_mor((1, 0))
    z_img = char_mor((0, 1)).scale((ONE + i4) * half) \
        + char_mor((1, 1)).scale((ONE - i4) * half)
    images = []
    for i in range(8):
        a_exp, r = divmod(i, 4)
        b_exp, c_exp = divmod(r, 2)
        m = Mor.identity(a.obj)
        for _ in range(a_exp + b_exp):
            m = m @ x_img
        for _ in range(c_exp):
            m = m @ z_img
        images.append(m)
    return ActionData(get_hopf("h8"), a, images, name="h8-on-k-v4")


_ACTION_BUILDERS = {
    "kz2-on-k-z2": _act_kz2_on_kz2,
    "kz4-on-k-z2": _act_kz4_on_kz2,
    "ks3-on-rep-s3-regular": _act_ks3_on_regular,
    "h8-on-k-v4": _act_h8_on_kv4,
}


@lru_cache(maxsize=None)
def get_action(name: str) -> ActionData:
    if name not in _ACTION_BUILDERS:
        raise SchemaError(f"unknown catalog action {name!r}")
    return _ACTION_BUILDERS[name]()


def action_names(name: str) -> tuple[str, str]:
    """(hopf entry, algebra entry) for an action entry."""
    return {"kz2-on-k-z2": ("kz2", "k-z2"),
            "kz4-on-k-z2": ("kz4", "k-z2"),
            "ks3-on-rep-s3-regular": ("ks3", "rep-s3-regular"),
            "h8-on-k-v4": ("h8", "k-v4")}[name]


# -- catalog surface -------------------------------------------------------------


def catalog_build() -> list[CatalogEntry]:
    entries = []
    for name in _CATEGORY_BUILDERS:
        prov = ("checked-in exact document"
                if name in ("rep-s3", "fibonacci", "ising")
                else "generated pointed category")
        entries.append(CatalogEntry(name, "category",
                                    lambda n=name: get_category(n), prov))
    for name in _ALGEBRA_BUILDERS:
        prov = ("checked-in exact document" if name == "rep-s3-regular"
                else "generated subgroup algebra")
        entries.append(CatalogEntry(name, "algebra",
                                    lambda n=name: get_algebra(n), prov))
    for name in _HOPF_BUILDERS:
        entries.append(CatalogEntry(name, "hopf",
                                    lambda n=name: get_hopf(n),
                                    "generated structure constants"))
    for name in _ACTION_BUILDERS:
        entries.append(CatalogEntry(name, "action",
                                    lambda n=name: get_action(n),
                                    "generated images"))
    return entries


def selftest(deep: bool = False) -> dict:
    """Validate every catalog entry; raises CatalogSelfTestFailure.

    With deep=True, also re-run the (slow) étale check on every algebra
    entry; the default checks categories and Hopf data exhaustively and
    algebra axioms structurally.
    """
    results = {}
    try:
        for name in _CATEGORY_BUILDERS:
            validate_category(get_category(name))
            results[name] = "ok"
        for name in _ALGEBRA_BUILDERS:
            a = get_algebra(name)
            from .algebras import check_associative, check_unital
            ok, witness = check_associative(a)
            if not ok:
                raise CatalogSelfTestFailure(f"{name}: associativity {witness}")
            if not check_unital(a):
                raise CatalogSelfTestFailure(f"{name}: unit law fails")
            if deep and not is_etale(a)["etale"]:
                raise CatalogSelfTestFailure(f"{name}: not etale")
            results[name] = "ok"
        for name in _HOPF_BUILDERS:
            ok, witness = validate_hopf(get_hopf(name))
            if not ok:
                raise CatalogSelfTestFailure(f"{name}: {witness}")
            results[name] = "ok"
        for name in _ACTION_BUILDERS:
            ok, witnesses = validate_action(get_action(name))
            if not ok:
                raise CatalogSelfTestFailure(f"{name}: {witnesses[0]}")
            results[name] = "ok"
    except CatalogSelfTestFailure:
        raise
    except EtaleLabError as exc:
        raise CatalogSelfTestFailure(str(exc)) from exc
    return results


def export_doc(name: str) -> dict:
    """The JSON document of any catalog entry."""
    from .algebras import algebra_to_doc
    from .fusion import category_to_doc
    from .hopf import action_to_doc, hopf_to_doc
    if name in _CATEGORY_BUILDERS:
        return category_to_doc(get_category(name))
    if name in _ALGEBRA_BUILDERS:
        return algebra_to_doc(get_algebra(name))
    if name in _HOPF_BUILDERS:
        return hopf_to_doc(get_hopf(name))
    if name in _ACTION_BUILDERS:
        return action_to_doc(get_action(name))
    raise SchemaError(f"unknown catalog entry {name!r}")
