"""Finite-dimensional Hopf algebras over the scalar field, their duals,
actions on algebras in a category, faithfulness, the gamma epimorphism
Q(A) -> H*, and the group-algebra no-go verdict."""

from __future__ import annotations

import random

from .algebras import AlgebraObj
from .convolution import (ConvolutionAlgebra, conv_product,
                          is_algebra_automorphism)
from .diagrams import Mor, mor_from_json, mor_to_json, tensor_mor
from .errors import (Infeasible, MultiplicativityFailure, NotCommutative,
                     SchemaError, ShapeMismatch)
from .linalg import ScalarMatrix, nullspace, rank, solve
from .scalars import ONE, ZERO, Scalar, from_complex, rat
from .symmetry import recognize_group


class HopfData:
    """Structure tensors of a Hopf algebra on a chosen basis.

    mult[i][j][k] is the e_k coefficient of e_i e_j; comult[i][j][k] the
    e_j (x) e_k coefficient of the coproduct of e_i; antipode[i][j] the
    e_i coefficient of S(e_j).
    """

    def __init__(self, name, basis, mult, unit, comult, counit, antipode):
        self.name = name
        self.basis = list(basis)
        self.dim = len(basis)
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode

    def product(self, x, y):
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                if y[j].is_zero():
                    continue
                f = x[i] * y[j]
                for k in range(n):
                    c = self.mult[i][j][k]
                    if not c.is_zero():
                        out[k] = out[k] + f * c
        return out

    def coproduct(self, x):
        """Coproduct of a coordinate vector, as an n x n coefficient matrix."""
        n = self.dim
        out = ScalarMatrix.zeros(n, n)
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                for k in range(n):
                    c = self.comult[i][j][k]
                    if not c.is_zero():
                        out.data[j][k] = out.data[j][k] + x[i] * c
        return out

    def counit_of(self, x):
        out = ZERO
        for c, xc in zip(self.counit, x):
            out = out + c * xc
        return out

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i))

    def is_cocommutative(self):
        return all(self.comult[i][j][k] == self.comult[i][k][j]
                   for i in range(self.dim)
                   for j in range(self.dim) for k in range(j))

    def __repr__(self):
        return f"HopfData({self.name!r}, dim={self.dim})"


def _basis_vec(n, i):
    return [ONE if j == i else ZERO for j in range(n)]


def validate_hopf(h: HopfData):
    """Check all Hopf axioms exactly; returns (ok, witness or None)."""
    n = h.dim
    e = [_basis_vec(n, i) for i in range(n)]
    # associativity and unit
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if h.product(h.product(e[i], e[j]), e[k]) != \
                        h.product(e[i], h.product(e[j], e[k])):
                    return False, f"associativity at ({i},{j},{k})"
    for i in range(n):
        if h.product(h.unit, e[i]) != e[i] or h.product(e[i], h.unit) != e[i]:
            return False, f"unit at {i}"

    def tensor_product(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
        # componentwise product in H (x) H of coproduct coefficient matrices
        out = ScalarMatrix.zeros(n, n)
        for j1 in range(n):
            for k1 in range(n):
                if a.data[j1][k1].is_zero():
                    continue
                for j2 in range(n):
                    for k2 in range(n):
                        v = b.data[j2][k2]
                        if v.is_zero():
                            continue
                        f = a.data[j1][k1] * v
                        left = h.mult[j1][j2]
                        right = h.mult[k1][k2]
                        for p in range(n):
                            if left[p].is_zero():
                                continue
                            for q in range(n):
                                if right[q].is_zero():
                                    continue
                                out.data[p][q] = out.data[p][q] \
                                    + f * left[p] * right[q]
        return out

    # coassociativity: compare (Delta (x) 1) and (1 (x) Delta) as 3-tensors
    for i in range(n):
        d = h.coproduct(e[i])
        lhs = {}
        rhs = {}
        for j in range(n):
            for k in range(n):
                v = d.data[j][k]
                if v.is_zero():
                    continue
                dj = h.coproduct(e[j])
                for p in range(n):
                    for q in range(n):
                        w = dj.data[p][q]
                        if not w.is_zero():
                            lhs[(p, q, k)] = lhs.get((p, q, k), ZERO) + v * w
                dk = h.coproduct(e[k])
                for p in range(n):
                    for q in range(n):
                        w = dk.data[p][q]
                        if not w.is_zero():
                            rhs[(j, p, q)] = rhs.get((j, p, q), ZERO) + v * w
        keys = set(lhs) | set(rhs)
        if any(lhs.get(key, ZERO) != rhs.get(key, ZERO) for key in keys):
            return False, f"coassociativity at {i}"
    # counit axioms
    for i in range(n):
        d = h.coproduct(e[i])
        left = [ZERO] * n
        right = [ZERO] * n
        for j in range(n):
            for k in range(n):
                v = d.data[j][k]
                if v.is_zero():
                    continue
                left[k] = left[k] + v * h.counit[j]
                right[j] = right[j] + v * h.counit[k]
        if left != e[i] or right != e[i]:
            return False, f"counit at {i}"
    # bialgebra: coproduct is an algebra map, counit multiplicative
    for i in range(n):
        for j in range(n):
            prod = h.product(e[i], e[j])
            if h.coproduct(prod) != tensor_product(h.coproduct(e[i]),
                                                   h.coproduct(e[j])):
                return False, f"coproduct multiplicativity at ({i},{j})"
            if h.counit_of(prod) != h.counit[i] * h.counit[j]:
                return False, f"counit multiplicativity at ({i},{j})"
    du = h.coproduct(h.unit)
    expect = ScalarMatrix.zeros(n, n)
    for j in range(n):
        for k in range(n):
            expect.data[j][k] = h.unit[j] * h.unit[k]
    if du != expect:
        return False, "coproduct of unit"
    if h.counit_of(h.unit) != ONE:
        return False, "counit of unit"
    # antipode axioms
    for i in range(n):
        d = h.coproduct(e[i])
        left = [ZERO] * n
        right = [ZERO] * n
        for j in range(n):
            sj = [h.antipode.data[p][j] for p in range(n)]
            for k in range(n):
                v = d.data[j][k]
                if v.is_zero():
                    continue
                term = h.product(sj, e[k])
                left = [a + v * b for a, b in zip(left, term)]
                sk = [h.antipode.data[p][k] for p in range(n)]
                term = h.product(e[j], sk)
                right = [a + v * b for a, b in zip(right, term)]
        target = [h.counit[i] * u for u in h.unit]
        if left != target or right != target:
            return False, f"antipode at {i}"
    return True, None


def dual_hopf(h: HopfData, name: str | None = None) -> HopfData:
    """The dual Hopf algebra on the dual basis."""
    n = h.dim
    mult = [[[h.comult[k][i][j] for k in range(n)] for j in range(n)]
            for i in range(n)]
    comult = [[[h.mult[j][k][i] for k in range(n)] for j in range(n)]
              for i in range(n)]
    antipode = h.antipode.transpose()
    return HopfData(name or h.name + "*", [b + "*" for b in h.basis],
                    mult, list(h.counit), comult, list(h.unit), antipode)


def dual_product(h: HopfData, l, m):
    """Product of functionals l, m in H*: (l m)(e_i) = sum over comult."""
    n = h.dim
    out = [ZERO] * n
    for i in range(n):
        for j in range(n):
            if l[j].is_zero():
                continue
            for k in range(n):
                c = h.comult[i][j][k]
                if not c.is_zero() and not m[k].is_zero():
                    out[i] = out[i] + c * l[j] * m[k]
    return out


# -- constructions ------------------------------------------------------------


def group_algebra(table: list[list[int]], names: list[str],
                  name: str) -> HopfData:
    """k[G] from a multiplication table: basis grouplike."""
    n = len(table)
    ident = next(i for i in range(n)
                 if all(table[i][j] == j for j in range(n)))
    inv = [next(j for j in range(n) if table[i][j] == ident) for i in range(n)]
    mult = [[[ONE if table[i][j] == k else ZERO for k in range(n)]
             for j in range(n)] for i in range(n)]
    comult = [[[ONE if j == i and k == i else ZERO for k in range(n)]
               for j in range(n)] for i in range(n)]
    unit = _basis_vec(n, ident)
    counit = [ONE] * n
    antipode = ScalarMatrix.zeros(n, n)
    for j in range(n):
        antipode.data[inv[j]][j] = ONE
    return HopfData(name, list(names), mult, unit, comult, counit, antipode)


def function_algebra(table: list[list[int]], names: list[str],
                     name: str) -> HopfData:
    """k(G), the function Hopf algebra on delta functions."""
    return dual_hopf(group_algebra(table, names, name), name=name)


def solve_antipode(name, basis, mult, unit, comult, counit) -> HopfData:
    """Complete bialgebra data to a Hopf algebra by solving the (linear)
    antipode axiom sum S(h_(0)) h_(1) = counit(h) unit exactly."""
    n = len(basis)
    rows = []
    rhs = []
    for i in range(n):
        for t in range(n):
            row = [ZERO] * (n * n)
            for j in range(n):
                for k in range(n):
                    c = comult[i][j][k]
                    if c.is_zero():
                        continue
                    # S(e_j) e_k contributes sum_p S[p][j] mult[p][k][t]
                    for p in range(n):
                        m = mult[p][k][t]
                        if not m.is_zero():
                            row[p * n + j] = row[p * n + j] + c * m
            rows.append(row)
            rhs.append(counit[i] * unit[t])
    try:
        sol, _null = solve(ScalarMatrix(rows), rhs)
    except Infeasible as exc:
        raise SchemaError("no antipode: the bialgebra is not Hopf") from exc
    antipode = ScalarMatrix([[sol[p * n + j] for j in range(n)]
                             for p in range(n)])
    h = HopfData(name, basis, mult, unit, comult, counit, antipode)
    ok, witness = validate_hopf(h)
    if not ok:
        raise SchemaError(f"no two-sided antipode: {witness}")
    return h


def kac_paljutkin() -> HopfData:
    """The 8-dimensional Kac-Paljutkin Hopf algebra H8.

    Basis x^a y^b z^c with x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz,
    z^2 = (1 + x + y - xy)/2; Delta(x) = x(x)x, Delta(y) = y(x)y,
    Delta(z) = ((1(x)1 + 1(x)x + y(x)1 - y(x)x)/2)(z(x)z).
    """
    n = 8
    half = rat(1) / rat(2)

    def idx(a, b, c):
        return a * 4 + b * 2 + c

    basis = [f"x^{a}y^{b}z^{c}" for a in range(2) for b in range(2)
             for c in range(2)]

    def mono_product(a, b, c, d, e, f):
        """Product of monomials as a coordinate vector."""
        out = [ZERO] * n
        if c == 0:
            out[idx((a + d) % 2, (b + e) % 2, f)] = ONE
            return out
        aa, bb = (a + e) % 2, (b + d) % 2
        if f == 0:
            out[idx(aa, bb, 1)] = ONE
            return out
        # z^2 = (1 + x + y - xy)/2 times x^aa y^bb
        for (p, q, s) in ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)):
            out[idx((aa + p) % 2, (bb + q) % 2, 0)] = half * rat(s)
        return out

    def decode(i):
        a, r = divmod(i, 4)
        b, c = divmod(r, 2)
        return a, b, c

    mult = [[mono_product(*decode(i), *decode(j)) for j in range(n)]
            for i in range(n)]

    def pair_product(u: dict, v: dict) -> dict:
        out: dict = {}
        for (i1, j1), c1 in u.items():
            for (i2, j2), c2 in v.items():
                left = mult[i1][i2]
                right = mult[j1][j2]
                for p in range(n):
                    if left[p].is_zero():
                        continue
                    for q in range(n):
                        if right[q].is_zero():
                            continue
                        key = (p, q)
                        out[key] = out.get(key, ZERO) + c1 * c2 * left[p] * right[q]
        return {k: v for k, v in out.items() if not v.is_zero()}

    dx = {(idx(1, 0, 0), idx(1, 0, 0)): ONE}
    dy = {(idx(0, 1, 0), idx(0, 1, 0)): ONE}
    one = idx(0, 0, 0)
    omega = {(one, one): half, (one, idx(1, 0, 0)): half,
             (idx(0, 1, 0), one): half, (idx(0, 1, 0), idx(1, 0, 0)): -half}
    dz = pair_product(omega, {(idx(0, 0, 1), idx(0, 0, 1)): ONE})
    comult = []
    for i in range(n):
        a, r = divmod(i, 4)
        b, c = divmod(r, 2)
        d = {(one, one): ONE}
        for _ in range(a):
            d = pair_product(d, dx)
        for _ in range(b):
            d = pair_product(d, dy)
        for _ in range(c):
            d = pair_product(d, dz)
        mat = [[ZERO] * n for _ in range(n)]
        for (p, q), v in d.items():
            mat[p][q] = v
        comult.append(mat)
    unit = _basis_vec(n, one)
    counit = [ONE] * n
    return solve_antipode("kac-paljutkin-h8", basis, mult, unit, comult,
                          counit)


# -- grouplikes -----------------------------------------------------------------


def grouplikes(h: HopfData, seed: int = 1234) -> list[list[Scalar]]:
    """All grouplike elements of a cocommutative Hopf algebra, exactly.

    Grouplikes are the characters of the dual algebra H*; for
    cocommutative H that algebra is commutative and its characters are
    found as common left eigenvectors, then recognized and verified
    exactly.  Raises NotCommutative when H is not cocommutative.
    """
    import numpy as np

    if not h.is_cocommutative():
        raise NotCommutative(
            "grouplike extraction requires a cocommutative Hopf algebra")
    n = h.dim
    # left multiplication operators of H*: L_j[i][k] = comult[i][j][k]
    ops = [np.array([[h.comult[i][j][k].embed() for k in range(n)]
                     for i in range(n)]).T for j in range(n)]
    unit_num = np.array([v.embed() for v in h.counit])  # unit of H*

    def is_grouplike(coords) -> bool:
        # exact: Delta(g) = g (x) g coordinatewise, counit(g) = 1
        for j in range(n):
            for k in range(n):
                total = ZERO
                for i in range(n):
                    c = h.comult[i][j][k]
                    if not c.is_zero():
                        total = total + c * coords[i]
                if total != coords[j] * coords[k]:
                    return False
        return h.counit_of(coords) == ONE

    conductors = list(range(1, max(n, 4) + 1))
    exact = []
    seen = set()
    rng = random.Random(seed)
    for _attempt in range(12):
        w = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
             for _ in range(n)]
        m = sum(wj * op for wj, op in zip(w, ops))
        _vals, vecs = np.linalg.eig(m.T)
        for col in range(n):
            v = vecs[:, col]
            norm = v @ unit_num
            if abs(norm) < 1e-9:
                continue
            v = v / norm
            for N in conductors:
                coords = [from_complex(complex(z), N) for z in v]
                if any(c is None for c in coords):
                    continue
                if is_grouplike(coords):
                    key = tuple(repr(c) for c in coords)
                    if key not in seen:
                        seen.add(key)
                        exact.append(coords)
                break
        if len(exact) == n:
            break
    exact.sort(key=lambda g: tuple((round(c.embed().real, 8),
                                    round(c.embed().imag, 8)) for c in g))
    return exact


# -- actions -------------------------------------------------------------------


class ActionData:
    """An action of H on an algebra A, as curried images in C(A, A)."""

    def __init__(self, hopf: HopfData, algebra: AlgebraObj,
                 images: list[Mor], name: str = "action") -> None:
        if len(images) != hopf.dim:
            raise ShapeMismatch("one image per Hopf basis element required")
        for g in images:
            if g.dom != algebra.obj or g.cod != algebra.obj:
                raise ShapeMismatch("images must be endomorphisms of A")
        self.hopf = hopf
        self.algebra = algebra
        self.images = images
        self.name = name

    def rho(self, coords) -> Mor:
        out = Mor.zero(self.algebra.obj, self.algebra.obj)
        for c, g in zip(coords, self.images):
            if not c.is_zero():
                out = out + g.scale(c)
        return out


def validate_action(act: ActionData):
    """Exact module, module-algebra and unit axioms; (ok, witnesses)."""
    h, a = act.hopf, act.algebra
    n = h.dim
    witnesses = []
    ident = Mor.identity(a.obj)
    if act.rho(h.unit) != ident:
        witnesses.append("module: rho(1_H) != id")
    e = [_basis_vec(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if act.rho(h.product(e[i], e[j])) != act.images[i] @ act.images[j]:
                witnesses.append(f"module: rho(e{i} e{j}) != rho(e{i})rho(e{j})")
    for i in range(n):
        d = h.coproduct(e[i])
        total = None
        for j in range(n):
            for k in range(n):
                v = d.data[j][k]
                if v.is_zero():
                    continue
                term = tensor_mor(act.images[j], act.images[k]).scale(v)
                total = term if total is None else total + term
        lhs = act.images[i] @ a.mult
        rhs = a.mult @ total
        if lhs != rhs:
            witnesses.append(f"module-algebra: fails at basis {i}")
    for i in range(n):
        if act.images[i] @ a.unit != a.unit.scale(h.counit[i]):
            witnesses.append(f"unit compatibility: fails at basis {i}")
    return (not witnesses), witnesses


def check_faithful(act: ActionData):
    """Kernel basis of H -> C(A, A); empty list = faithful."""
    Q = ConvolutionAlgebra(act.algebra)
    mat = ScalarMatrix([Q.to_coords(g) for g in act.images]).transpose()
    return nullspace(mat)


def gamma_map(act: ActionData, Q: ConvolutionAlgebra) -> dict:
    """The pairing map gamma: Q(A) -> H*, with exactness certificates.

    gamma(x)(h) = d(A)^{-1} trace(rho(h) x).  Returns the matrix (rows =
    dual-basis coordinates, columns = Q basis), its rank, and asserts
    multiplicativity and unitality exactly.
    """
    from .diagrams import trace
    h = act.hopf
    dinv = act.algebra.dim.inverse()
    n = h.dim

    def gamma(x: Mor):
        return [dinv * trace(g @ x) for g in act.images]

    cols = [gamma(x) for x in Q.basis]
    mat = ScalarMatrix([[cols[k][i] for k in range(Q.dim)] for i in range(n)])
    for i, x in enumerate(Q.basis):
        for j, y in enumerate(Q.basis):
            lhs = gamma(conv_product(act.algebra, x, y))
            rhs = dual_product(h, cols[i], cols[j])
            if lhs != rhs:
                raise MultiplicativityFailure(
                    f"gamma(x*y) != gamma(x)gamma(y) at basis pair ({i},{j})")
    if gamma(Q.unit) != list(h.counit):
        raise MultiplicativityFailure("gamma(unit) != counit")
    return {"matrix": mat, "rank": rank(mat)}


def no_go_report(act: ActionData, seed: int = 1234) -> dict:
    """Run the full pipeline and issue the group-algebra verdict."""
    h = act.hopf
    report = {"hopf": h.name, "algebra": act.algebra.name,
              "dim_h": h.dim}
    ok, witness = validate_hopf(h)
    report["hopf_valid"] = ok
    if not ok:
        report["hopf_witness"] = witness
        report["verdict"] = "InvalidHopf"
        return report
    report["cocommutative"] = h.is_cocommutative()
    ok, witnesses = validate_action(act)
    report["action_valid"] = ok
    if not ok:
        report["action_witnesses"] = witnesses
        report["verdict"] = "InvalidAction"
        return report
    kernel = check_faithful(act)
    report["kernel_dim"] = len(kernel)
    Q = ConvolutionAlgebra(act.algebra)
    gamma = gamma_map(act, Q)
    report["gamma_rank"] = gamma["rank"]
    if kernel:
        report["verdict"] = "NotFaithful"
        report["faithful_quotient_dim"] = h.dim - len(kernel)
        return report
    if not report["cocommutative"]:
        # valid + faithful + non-cocommutative contradicts the structure
        # theorem; flag rather than errorring out
        report["verdict"] = "Inconsistent"
        return report
    gls = grouplikes(h, seed=seed)
    report["grouplike_count"] = len(gls)
    report["is_group_algebra"] = (len(gls) == h.dim)
    autos = []
    all_autos = True
    for g in gls:
        m = act.rho(g)
        if not is_algebra_automorphism(act.algebra, m):
            all_autos = False
        autos.append(m)
    report["grouplikes_are_automorphisms"] = all_autos
    if report["is_group_algebra"]:
        table = []
        for g1 in gls:
            row = []
            for g2 in gls:
                prod = h.product(g1, g2)
                row.append(next(i for i, g3 in enumerate(gls) if g3 == prod))
            table.append(row)
        report["group"] = recognize_group(table)
        report["verdict"] = "GroupAction"
    else:
        report["verdict"] = "Inconsistent"
    return report


# -- document I/O ---------------------------------------------------------------


def hopf_to_doc(h: HopfData) -> dict:
    return {
        "name": h.name,
        "dim": h.dim,
        "basis": list(h.basis),
        "mult": [[[v.to_json() for v in cell] for cell in row]
                 for row in h.mult],
        "unit": [v.to_json() for v in h.unit],
        "comult": [[[v.to_json() for v in cell] for cell in row]
                   for row in h.comult],
        "counit": [v.to_json() for v in h.counit],
        "antipode": [[v.to_json() for v in row] for row in h.antipode.data],
    }


def load_hopf(doc: dict) -> HopfData:
    try:
        basis = list(doc["basis"])
        n = int(doc["dim"])
        if len(basis) != n:
            raise SchemaError("dim does not match basis length")
        mult = [[[Scalar.from_json(v) for v in cell] for cell in row]
                for row in doc["mult"]]
        unit = [Scalar.from_json(v) for v in doc["unit"]]
        comult = [[[Scalar.from_json(v) for v in cell] for cell in row]
                  for row in doc["comult"]]
        counit = [Scalar.from_json(v) for v in doc["counit"]]
        antipode = ScalarMatrix([[Scalar.from_json(v) for v in row]
                                 for row in doc["antipode"]])
    except (KeyError, ValueError, IndexError) as exc:
        raise SchemaError(f"malformed Hopf document: {exc}") from exc
    h = HopfData(doc.get("name", "hopf"), basis, mult, unit, comult, counit,
                 antipode)
    ok, witness = validate_hopf(h)
    if not ok:
        raise SchemaError(f"Hopf axioms fail: {witness}")
    return h


def action_to_doc(act: ActionData) -> dict:
    return {"name": act.name, "hopf": act.hopf.name,
            "algebra": act.algebra.name,
            "images": [mor_to_json(g) for g in act.images]}


def load_action(hopf: HopfData, algebra: AlgebraObj, doc: dict) -> ActionData:
    try:
        images = [mor_from_json(algebra.cat, d) for d in doc["images"]]
    except (KeyError, ShapeMismatch) as exc:
        raise SchemaError(f"malformed action document: {exc}") from exc
    return ActionData(hopf, algebra, images, name=doc.get("name", "action"))
