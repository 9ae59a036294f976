"""Search for connected étale algebras in a braided fusion category.

Pointed categories get an exact, complete answer: candidates are subgroup
supports whose twists and mutual braidings are trivial, with the
multiplication cochain solved as an integer congruence on root-of-unity
exponents.  General categories get a best-effort numeric answer: candidate
objects bounded by the hom-space estimate dim C(X, A) <= d(X) and a total
quantum dimension cap, attacked by seeded Newton multi-starts on the
unit/associativity/commutativity system.
"""

from __future__ import annotations

import random
from itertools import combinations, product

import numpy as np

from .algebras import is_etale, pointed_subgroup_algebra
from .diagrams import (Mor, Obj, _allowed_slots, _elementary, associator,
                       braiding_mor, fusion_basis, tensor_mor, tensor_obj,
                       unit_obj)
from .errors import SchemaError
from .fusion import Category
from .linalg import ScalarMatrix, solve_integer_congruence
from .scalars import ONE, Scalar, zeta


def is_pointed(cat: Category) -> bool:
    return all(d == ONE for d in cat.qdim) and all(
        sum(m for _, m in cat.channels(a, b)) == 1
        for a in range(cat.n_simples) for b in range(cat.n_simples))


# -- pointed case: exact and complete -------------------------------------------


def _group_law(cat: Category):
    prod = {}
    for a in range(cat.n_simples):
        for b in range(cat.n_simples):
            prod[(a, b)] = cat.channels(a, b)[0][0]
    return prod


def _subgroups(cat: Category):
    n = cat.n_simples
    prod = _group_law(cat)
    unit = cat.unit

    def closure(gens):
        h = {unit}
        frontier = set(gens) | h
        while frontier:
            h |= frontier
            frontier = {prod[(a, b)] for a in h for b in h} - h
        return frozenset(h)

    subs = {closure(())}
    for size in range(1, n):
        for gens in combinations(range(n), size):
            subs.add(closure(gens))
    return sorted(subs, key=lambda h: (len(h), sorted(h)))


def _r_scalar(cat: Category, a: int, b: int) -> Scalar:
    c = cat.channels(a, b)[0][0]
    return cat.r_block(a, b, c).data[0][0]


def _as_root_exponent(v: Scalar, N: int) -> int | None:
    for k in range(N):
        if v == zeta(N, k):
            return k
    return None


def _solve_cochain(cat: Category, members: list[int]) -> dict | None:
    """Unit-normalized multiplication coefficients lambda(a, b) satisfying
    associativity against the restricted associator, commutativity against
    the braiding, solved exactly on root-of-unity exponents; None when the
    congruence system is infeasible at every tried conductor."""
    prod = _group_law(cat)
    unit = cat.unit
    pairs = [(a, b) for a in members for b in members]
    var = {p: i for i, p in enumerate(pairs)}

    def omega(a, b, c):
        # associator scalar on the (a, b, c) triple of invertibles
        ab = prod[(a, b)]
        bc = prod[(b, c)]
        blk = cat.f_block(a, b, c, prod[(ab, c)])
        return blk.data[0][0]

    base = cat.conductor
    for mult in (1, 2, 4):
        N = base * mult
        rows, rhs = [], []

        def row_of(terms, value):
            row = [0] * len(pairs)
            for p, s in terms:
                row[var[p]] += s
            k = _as_root_exponent(value, N)
            if k is None:
                return None
            rows.append(row)
            rhs.append((-k) % N)
            return True

        ok = True
        for a in members:
            ok = ok and row_of([((unit, a), 1)], ONE)
            ok = ok and row_of([((a, unit), 1)], ONE)
        for a in members:
            for b in members:
                for c in members:
                    # lambda(a,b) lambda(ab,c) omega = lambda(b,c) lambda(a,bc)
                    terms = [((a, b), 1), ((prod[(a, b)], c), 1),
                             ((b, c), -1), ((a, prod[(b, c)]), -1)]
                    ok = ok and row_of(terms, omega(a, b, c))
                # lambda(b,a) R(a,b) = lambda(a,b)
                ok = ok and row_of([((b, a), 1), ((a, b), -1)],
                                   _r_scalar(cat, a, b))
        if not ok:
            continue
        sol = solve_integer_congruence(rows, rhs, N)
        if sol is None:
            continue
        return {(cat.simples[a], cat.simples[b]): zeta(N, sol[var[(a, b)]])
                for a, b in pairs}
    return None


def scan_pointed(cat: Category, max_total_qdim: float) -> list[dict]:
    results = []
    for h in _subgroups(cat):
        members = sorted(h)
        if len(members) > max_total_qdim + 1e-9:
            continue
        # commutativity forces trivial twists and trivial mutual braiding
        if any(_r_scalar(cat, a, a) != ONE for a in members):
            continue
        if any(_r_scalar(cat, a, b) * _r_scalar(cat, b, a) != ONE
               for a, b in combinations(members, 2)):
            continue
        cocycle = _solve_cochain(cat, members)
        if cocycle is None:
            continue
        names = [cat.simples[a] for a in members]
        alg = pointed_subgroup_algebra(cat, names, cocycle=cocycle,
                                       name="k[" + "+".join(names) + "]")
        report = is_etale(alg)
        if not report["etale"]:
            continue
        results.append({"members": names, "label": "COMPLETE",
                        "algebra": alg})
    return results


# -- general case: best-effort numeric -------------------------------------------


def _candidate_objects(cat: Category, max_total_qdim: float):
    """Connected candidates: unit once, simple X at most floor(d(X)) times,
    total embedded dimension at most max_total_qdim."""
    others = [s for s in range(cat.n_simples) if s != cat.unit]
    dims = [abs(cat.qdim[s].embed().real) for s in others]
    caps = [int(d + 1e-9) for d in dims]
    out = []
    for mults in product(*(range(c + 1) for c in caps)):
        total = 1.0 + sum(m * d for m, d in zip(mults, dims))
        if total > max_total_qdim + 1e-9:
            continue
        simples = [cat.unit] + [s for s, m in zip(others, mults)
                                for _ in range(m)]
        out.append(sorted(simples))
    out.sort(key=lambda s: (len(s), s))
    return out


def _newton_scan_object(cat: Category, simples: list[int], seed: int,
                        starts: int, tol: float):
    """Gauss-Newton multi-start on the algebra equations for one object.

    Returns the residual-minimizing solution as (residual, coords) when a
    start converges below tol, else None.
    """
    obj = Obj(cat, simples)
    if len(simples) == 1:
        return 0.0, []
    xx = tensor_obj(obj, obj)
    slots = _allowed_slots(xx, obj)
    k = len(slots)
    elems = [_elementary(xx, obj, s) for s in slots]
    left_mats = [tensor_mor(e, Mor.identity(obj)).mat.embed() for e in elems]
    right_mats = [tensor_mor(Mor.identity(obj), e).mat.embed() for e in elems]
    elem_mats = [e.mat.embed() for e in elems]
    alpha = associator(obj, obj, obj).mat.embed()
    braid = braiding_mor(obj, obj).mat.embed()
    upos = obj.simples.index(cat.unit)
    iota = ScalarMatrix.zeros(len(obj), 1)
    iota.data[upos][0] = ONE
    iota_mor = Mor(unit_obj(cat), obj, iota)
    ul = tensor_mor(iota_mor, Mor.identity(obj)).mat.embed()
    ur = tensor_mor(Mor.identity(obj), iota_mor).mat.embed()
    eye = np.eye(len(obj))
    # pairing slots: the unit-channel column of x_i (x) x_j, used to reject
    # degenerate solutions (nilpotent ideals satisfy all three equations)
    dbasis = fusion_basis(cat, obj, obj)
    pair_cols = {}
    for col, (i, j, c, _mu) in enumerate(dbasis):
        if c == cat.unit:
            pair_cols[(i, j)] = col

    def pieces(t):
        m = sum(ti * em for ti, em in zip(t, elem_mats))
        ml1 = sum(ti * em for ti, em in zip(t, left_mats))
        m1m = sum(ti * em for ti, em in zip(t, right_mats))
        return m, ml1, m1m

    def residual(t):
        m, ml1, m1m = pieces(t)
        parts = [m @ ml1 - (m @ m1m) @ alpha, m @ braid - m,
                 m @ ul - eye, m @ ur - eye]
        return np.concatenate([p.reshape(-1) for p in parts])

    def jac_col(t, j):
        m, ml1, m1m = pieces(t)
        em, el, er = elem_mats[j], left_mats[j], right_mats[j]
        parts = [em @ ml1 + m @ el - (em @ m1m + m @ er) @ alpha,
                 em @ braid - em, em @ ul, em @ ur]
        return np.concatenate([p.reshape(-1) for p in parts])

    def nondegenerate(t) -> bool:
        m, _, _ = pieces(t)
        p = np.zeros((len(obj), len(obj)), dtype=complex)
        for (i, j), col in pair_cols.items():
            p[i][j] = m[upos][col]
        return abs(np.linalg.det(p)) > 1e-6

    rng = random.Random(seed)
    for _start in range(starts):
        t = np.array([complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                      for _ in range(k)])
        for _it in range(60):
            r = residual(t)
            norm = float(np.linalg.norm(r))
            if norm < tol:
                break
            j = np.stack([jac_col(t, col) for col in range(k)], axis=1)
            step, *_ = np.linalg.lstsq(j, -r, rcond=None)
            if float(np.linalg.norm(step)) < 1e-14:
                break
            t = t + step
        norm = float(np.linalg.norm(residual(t)))
        if norm < tol and nondegenerate(t):
            return norm, [complex(v) for v in t]
    return None


def scan_general(cat: Category, max_total_qdim: float, seed: int = 1234,
                 starts: int = 64, tol: float = 1e-9) -> list[dict]:
    results = []
    for simples in _candidate_objects(cat, max_total_qdim):
        found = _newton_scan_object(cat, simples, seed, starts, tol)
        if found is None:
            continue
        norm, coords = found
        results.append({
            "members": [cat.simples[s] for s in simples],
            "label": "BEST_EFFORT",
            "residual": norm,
            "coords": [[z.real, z.imag] for z in coords],
        })
    return results


def etale_scan(cat: Category, max_total_qdim: float, seed: int = 1234,
               starts: int = 64, tol: float = 1e-9) -> dict:
    """Scan for connected étale algebra candidates up to the given total
    quantum dimension; exact/complete for pointed categories, numeric
    best-effort otherwise."""
    if max_total_qdim < 1:
        raise SchemaError("max_total_qdim must be at least 1")
    if is_pointed(cat):
        found = scan_pointed(cat, max_total_qdim)
        return {"category": cat.name, "label": "COMPLETE",
                "candidates": [{"members": r["members"],
                                "label": r["label"]} for r in found]}
    found = scan_general(cat, max_total_qdim, seed=seed, starts=starts,
                         tol=tol)
    return {"category": cat.name, "label": "BEST_EFFORT",
            "candidates": [{k: v for k, v in r.items() if k != "coords"}
                           for r in found]}
