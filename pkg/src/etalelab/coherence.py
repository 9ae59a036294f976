"""Pentagon and hexagon verification on labelled fusion-tree spaces.

This is the raw-tensor route: states are dicts over tree-basis tuples and
F/R moves act as sparse linear maps.  The diagram engine re-derives the
same identities as morphism equalities, so the two act as independent
checks on one convention: overcrossings apply R, F maps left trees
((ab)c) to right trees (a(bc)).
"""

from __future__ import annotations

from itertools import product

from .linalg import invert
from .scalars import ZERO


def _f_rows(cat, a, b, c, d):
    """Row (e,mu,nu) -> list of ((f,rho,sigma), coeff)."""
    lb = cat.left_tree_basis(a, b, c, d)
    rb = cat.right_tree_basis(a, b, c, d)
    blk = cat.f_block(a, b, c, d)
    return {row: [(col, blk.data[i][j]) for j, col in enumerate(rb)
                  if not blk.data[i][j].is_zero()]
            for i, row in enumerate(lb)}


def _vec_add(vec, key, coeff):
    if key in vec:
        vec[key] = vec[key] + coeff
        if vec[key].is_zero():
            del vec[key]
    elif not coeff.is_zero():
        vec[key] = coeff


def _vecs_equal(u, v, mode, tol):
    keys = set(u) | set(v)
    for k in keys:
        x = u.get(k, ZERO)
        y = v.get(k, ZERO)
        if mode == "exact":
            if x != y:
                return False
        else:
            if abs(x.embed() - y.embed()) > tol:
                return False
    return True


def check_pentagons(cat, mode: str = "exact", tol: float = 1e-10,
                    first_only: bool = False):
    """Full enumeration of the pentagon identity.

    For externals (a,b,c,d) with total t, compares the two F-move chains
    from (((ab)c)d) to (a(b(cd))) on every basis tree.  Returns the list of
    violating label tuples (a,b,c,d,t).
    """
    n = cat.n_simples
    bad = []
    for a, b, c, d, t in product(range(n), repeat=5):
        basis_t1 = [(e, f, m1, m2, m3)
                    for e in range(n) for f in range(n)
                    for m1 in range(cat.n(a, b, e))
                    for m2 in range(cat.n(e, c, f))
                    for m3 in range(cat.n(f, d, t))]
        if not basis_t1:
            continue
        violated = False
        for start in basis_t1:
            e0, f0, m1, m2, m3 = start
            # path 1: F^{abc}_f ; F^{a g d}_t ; F^{bcd}_h
            t2 = {}
            for (g, n1, n2), coeff in _f_rows(cat, a, b, c, f0)[(e0, m1, m2)]:
                _vec_add(t2, (g, f0, n1, n2, m3), coeff)
            t3 = {}
            for (g, f, n1, n2, n3), coeff in t2.items():
                for (h, p2, p3), co in _f_rows(cat, a, g, d, t)[(f, n2, n3)]:
                    _vec_add(t3, (g, h, n1, p2, p3), coeff * co)
            end1 = {}
            for (g, h, n1, n2, n3), coeff in t3.items():
                for (k, q1, q2), co in _f_rows(cat, b, c, d, h)[(g, n1, n2)]:
                    _vec_add(end1, (k, h, q1, q2, n3), coeff * co)
            # path 2: F^{e c d}_t ; F^{a b k}_t
            t5 = {}
            for (k, q1, q3), coeff in _f_rows(cat, e0, c, d, t)[(f0, m2, m3)]:
                _vec_add(t5, (e0, k, m1, q1, q3), coeff)
            end2 = {}
            for (e, k, n1, q1, q3), coeff in t5.items():
                for (h, p, p3), co in _f_rows(cat, a, b, k, t)[(e, n1, q3)]:
                    _vec_add(end2, (k, h, q1, p, p3), coeff * co)
            if not _vecs_equal(end1, end2, mode, tol):
                violated = True
                break
        if violated:
            bad.append((a, b, c, d, t))
            if first_only:
                return bad
    return bad


def _braid_rows(cat, a, b, c, inverse: bool):
    """Index mu of V_c^{ab} -> [(nu of V_c^{ba}, coeff)] for c_{a,b} (or for
    the inverse braiding c^{-1}_{b,a}, same source and target spaces)."""
    blk = cat.r_block(a, b, c)
    if inverse:
        blk = invert(cat.r_block(b, a, c))
    return {mu: [(nu, blk.data[nu][mu]) for nu in range(blk.rows)
                 if not blk.data[nu][mu].is_zero()]
            for mu in range(blk.cols)}


def check_hexagons(cat, mode: str = "exact", tol: float = 1e-10,
                   first_only: bool = False):
    """Full enumeration of both hexagon identities.

    For externals (a,b,c) with total d, compares the two routes from
    ((ab)c) to (b(ca)) moving a to the right, once with the braiding and
    once with its inverse.  Returns violating tuples (a,b,c,d,which).
    """
    n = cat.n_simples
    bad = []
    for a, b, c, d in product(range(n), repeat=4):
        basis = [(e, m1, m2) for e in range(n)
                 for m1 in range(cat.n(a, b, e))
                 for m2 in range(cat.n(e, c, d))]
        if not basis:
            continue
        for inverse in (False, True):
            violated = False
            for start in basis:
                e0, m1, m2 = start
                # path A: F^{abc}_d ; braid a past (bc) channel f ; F^{bca}_d
                mid = {}
                for (f, rho, sigma), coeff in _f_rows(cat, a, b, c, d)[start]:
                    for sig2, co in _braid_rows(cat, a, f, d, inverse)[sigma]:
                        _vec_add(mid, (f, rho, sig2), coeff * co)
                end_a = {}
                for (f, rho, sig2), coeff in mid.items():
                    for (g, r2, s2), co in _f_rows(cat, b, c, a, d)[(f, rho, sig2)]:
                        _vec_add(end_a, (g, r2, s2), coeff * co)
                # path B: braid first vertex ; F^{bac}_d ; braid inner vertex
                mid2 = {}
                for mu2, co in _braid_rows(cat, a, b, e0, inverse)[m1]:
                    _vec_add(mid2, (e0, mu2, m2), co)
                mid3 = {}
                for (e, mu, nu), coeff in mid2.items():
                    for (f2, tau, ups), co in _f_rows(cat, b, a, c, d)[(e, mu, nu)]:
                        _vec_add(mid3, (f2, tau, ups), coeff * co)
                end_b = {}
                for (f2, tau, ups), coeff in mid3.items():
                    for tau2, co in _braid_rows(cat, a, c, f2, inverse)[tau]:
                        _vec_add(end_b, (f2, tau2, ups), coeff * co)
                if not _vecs_equal(end_a, end_b, mode, tol):
                    violated = True
                    break
            if violated:
                bad.append((a, b, c, d, "inverse" if inverse else "direct"))
                if first_only:
                    return bad
    return bad
