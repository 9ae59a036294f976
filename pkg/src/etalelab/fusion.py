"""Skeletal braided fusion category data: fusion rules, F- and R-symbols,
quantum dimensions, document loading and validation."""

from __future__ import annotations

from math import gcd

from .errors import (DimensionMismatch, HexagonViolation, NotQuadratic,
                     PentagonViolation, SchemaError)
from .linalg import ScalarMatrix
from .scalars import ZERO, Scalar, rat


class Category:
    """A skeletal braided fusion category, immutable after construction.

    Simples are indexed 0..n-1; all tensors are keyed by indices.  F blocks
    are stored as matrices over canonical tree bases (see tree_basis_*);
    omitted blocks default to the identity on admissible channels.
    """

    def __init__(self, name: str, simples: list[str], unit: str,
                 fusion: dict, dual: dict, qdim: dict,
                 f_blocks: dict | None = None, r_blocks: dict | None = None,
                 conductor: int = 1) -> None:
        self.name = name
        self.simples = list(simples)
        if len(set(simples)) != len(simples):
            raise SchemaError("duplicate simple names")
        self.index = {s: i for i, s in enumerate(simples)}
        if unit not in self.index:
            raise SchemaError(f"unit {unit!r} is not a simple")
        self.unit = self.index[unit]
        self.n_simples = len(simples)
        self.conductor = conductor
        # fusion: dict (ia, ib, ic) -> multiplicity, sparse
        self._n = {k: v for k, v in fusion.items() if v}
        self.dual = [dual[i] for i in range(self.n_simples)]
        self.qdim = [qdim[i] for i in range(self.n_simples)]
        self._f = dict(f_blocks or {})
        self._r = dict(r_blocks or {})

    # -- fusion rule access ---------------------------------------------

    def n(self, a: int, b: int, c: int) -> int:
        return self._n.get((a, b, c), 0)

    def channels(self, a: int, b: int):
        """Ordered list of (c, multiplicity) with N_ab^c > 0."""
        return [(c, self.n(a, b, c)) for c in range(self.n_simples)
                if self.n(a, b, c)]

    def name_of(self, i: int) -> str:
        return self.simples[i]

    # -- tree bases -------------------------------------------------------

    def left_tree_basis(self, a, b, c, d):
        """Basis of Hom(d, (a x b) x c): triples (e, mu, nu)."""
        return [(e, mu, nu)
                for e in range(self.n_simples)
                for mu in range(self.n(a, b, e))
                for nu in range(self.n(e, c, d))]

    def right_tree_basis(self, a, b, c, d):
        """Basis of Hom(d, a x (b x c)): triples (f, rho, sigma)."""
        return [(f, rho, sigma)
                for f in range(self.n_simples)
                for rho in range(self.n(b, c, f))
                for sigma in range(self.n(a, f, d))]

    def f_block(self, a, b, c, d) -> ScalarMatrix:
        """F-symbol matrix: rows = left tree basis, cols = right tree basis.

        |left;(e,mu,nu)> = sum_cols F[row][col] |right;(f,rho,sigma)>.
        """
        key = (a, b, c, d)
        if key in self._f:
            return self._f[key]
        lb, rb = self.left_tree_basis(*key), self.right_tree_basis(*key)
        if len(lb) != len(rb):
            raise DimensionMismatch(
                f"missing F block {self._key_names(key)} with unequal tree bases")
        return ScalarMatrix.identity(len(lb))

    def r_block(self, a, b, c) -> ScalarMatrix:
        """R-symbol matrix for c_{a,b} on channel c: shape N_ba^c x N_ab^c,
        entry [nu][mu]."""
        key = (a, b, c)
        if key in self._r:
            return self._r[key]
        n1, n2 = self.n(b, a, c), self.n(a, b, c)
        if n1 != n2:
            raise DimensionMismatch(
                f"missing R block {self._key_names(key)} with unequal channels")
        return ScalarMatrix.identity(n1)

    def _key_names(self, key):
        return tuple(self.simples[i] for i in key)

    # -- dimensions --------------------------------------------------------

    def dim(self, multiset: dict) -> Scalar:
        """Total quantum dimension of a direct sum {simple index: mult}."""
        total = ZERO
        for s, m in multiset.items():
            total = total + rat(m) * self.qdim[s]
        return total

    def __repr__(self):
        return f"Category({self.name!r}, simples={self.simples})"


# -- construction-time validation -------------------------------------------


def validate_category(cat: Category, mode: str = "exact", tol: float = 1e-10) -> None:
    """Check unit/dual/dimension constraints exactly and the pentagon and
    hexagon equations (exactly, or numerically within tol)."""
    u = cat.unit
    n = cat.n_simples
    for a in range(n):
        for b in range(n):
            if cat.n(a, u, b) != (1 if a == b else 0):
                raise SchemaError(f"unit constraint fails at N({cat.simples[a]},1)")
            if cat.n(u, a, b) != (1 if a == b else 0):
                raise SchemaError(f"unit constraint fails at N(1,{cat.simples[a]})")
            if cat.n(a, b, u) != (1 if b == cat.dual[a] else 0):
                raise SchemaError(
                    f"dual constraint fails at N({cat.simples[a]},{cat.simples[b]})^1")
        if cat.dual[cat.dual[a]] != a:
            raise SchemaError("dual is not an involution")
    # quantum dimensions: d(1) = 1, d(a) = d(a*), d(a)d(b) = sum N_ab^c d(c)
    if cat.qdim[u] != rat(1):
        raise DimensionMismatch("d(unit) must be 1")
    for a in range(n):
        if cat.qdim[a] != cat.qdim[cat.dual[a]]:
            raise DimensionMismatch(f"d({cat.simples[a]}) != d(dual)")
        if cat.qdim[a].embed().real <= 0:
            raise DimensionMismatch(f"d({cat.simples[a]}) not positive")
        for b in range(n):
            lhs = cat.qdim[a] * cat.qdim[b]
            rhs = ZERO
            for c, m in cat.channels(a, b):
                rhs = rhs + rat(m) * cat.qdim[c]
            if lhs != rhs:
                raise DimensionMismatch(
                    f"d({cat.simples[a]})d({cat.simples[b]}) != sum of channel dims")
    # gauge normalisation: F blocks touching the unit are identity
    for a in range(n):
        for b in range(n):
            for d in range(n):
                for key in [(u, a, b, d), (a, u, b, d), (a, b, u, d)]:
                    blk = cat.f_block(*key)
                    if blk != ScalarMatrix.identity(blk.rows):
                        raise SchemaError(
                            f"F block {cat._key_names(key)} with a unit label "
                            "must be the identity (unit-normalised gauge)")
    from .coherence import check_hexagons, check_pentagons
    bad = check_pentagons(cat, mode=mode, tol=tol, first_only=True)
    if bad:
        raise PentagonViolation(tuple(cat.simples[i] for i in bad[0]))
    bad = check_hexagons(cat, mode=mode, tol=tol, first_only=True)
    if bad:
        raise HexagonViolation(tuple(cat.simples[i] for i in bad[0][:-1]) + (bad[0][-1],))


# -- document I/O ------------------------------------------------------------


def load_category(doc: dict) -> Category:
    """Parse and fully validate a category document (see README for the
    schema)."""
    try:
        name = doc.get("name", "unnamed")
        conductor = int(doc.get("conductor", 1))
        simples = list(doc["simples"])
        unit = doc["unit"]
        index = {s: i for i, s in enumerate(simples)}
        dual = [index[doc["dual"][s]] for s in simples]
        qdim = [Scalar.from_json(doc["qdim"][s]) for s in simples]
        fusion = {}
        for key, channels in doc["fusion"].items():
            a, b = key.split()
            for c, m in channels.items():
                fusion[(index[a], index[b], index[c])] = int(m)
    except (KeyError, ValueError, IndexError) as exc:
        raise SchemaError(f"malformed category document: {exc}") from exc
    cat = Category(name, simples, unit, fusion, dual, qdim, conductor=conductor)
    f_blocks = {}
    for entry in doc.get("F", []):
        try:
            a, b, c, d = (index[s] for s in entry["abc_d"])
            rows = [tuple([index[t[0]], t[1], t[2]]) for t in entry["rows"]]
            cols = [tuple([index[t[0]], t[1], t[2]]) for t in entry["cols"]]
            mat = [[Scalar.from_json(v) for v in r] for r in entry["matrix"]]
        except (KeyError, ValueError, IndexError) as exc:
            raise SchemaError(f"malformed F entry: {exc}") from exc
        lb, rb = cat.left_tree_basis(a, b, c, d), cat.right_tree_basis(a, b, c, d)
        if sorted(rows) != sorted(lb) or sorted(cols) != sorted(rb):
            raise SchemaError(
                f"F entry {entry['abc_d']} bases do not match fusion rules")
        block = ScalarMatrix.zeros(len(lb), len(rb))
        for i, rkey in enumerate(rows):
            for j, ckey in enumerate(cols):
                block.data[lb.index(rkey)][rb.index(ckey)] = mat[i][j]
        f_blocks[(a, b, c, d)] = block
    r_blocks = {}
    for entry in doc.get("R", []):
        try:
            a, b, c = (index[s] for s in entry["ab_c"])
            mat = [[Scalar.from_json(v) for v in r] for r in entry["matrix"]]
        except (KeyError, ValueError, IndexError) as exc:
            raise SchemaError(f"malformed R entry: {exc}") from exc
        if len(mat) != cat.n(b, a, c) or any(len(r) != cat.n(a, b, c) for r in mat):
            raise SchemaError(f"R entry {entry['ab_c']} has wrong shape")
        r_blocks[(a, b, c)] = ScalarMatrix(mat)
    cat = Category(name, simples, unit, fusion, dual, qdim,
                   f_blocks, r_blocks, conductor)
    mode = doc.get("verify", "exact")
    if mode not in ("exact", "numeric"):
        raise SchemaError(f"unknown verify mode {mode!r}")
    validate_category(cat, mode=mode)
    return cat


def category_to_doc(cat: Category) -> dict:
    doc = {
        "name": cat.name,
        "conductor": cat.conductor,
        "simples": list(cat.simples),
        "unit": cat.simples[cat.unit],
        "dual": {s: cat.simples[cat.dual[i]] for i, s in enumerate(cat.simples)},
        "qdim": {s: cat.qdim[i].to_json() for i, s in enumerate(cat.simples)},
        "fusion": {},
        "F": [],
        "R": [],
        "verify": "exact",
    }
    for (a, b, c), m in sorted(cat._n.items()):
        key = f"{cat.simples[a]} {cat.simples[b]}"
        doc["fusion"].setdefault(key, {})[cat.simples[c]] = m
    for (a, b, c, d), blk in sorted(cat._f.items()):
        lb = cat.left_tree_basis(a, b, c, d)
        rb = cat.right_tree_basis(a, b, c, d)
        doc["F"].append({
            "abc_d": [cat.simples[i] for i in (a, b, c, d)],
            "rows": [[cat.simples[e], mu, nu] for e, mu, nu in lb],
            "cols": [[cat.simples[f], rho, sigma] for f, rho, sigma in rb],
            "matrix": [[v.to_json() for v in r] for r in blk.data],
        })
    for (a, b, c), blk in sorted(cat._r.items()):
        doc["R"].append({
            "ab_c": [cat.simples[i] for i in (a, b, c)],
            "matrix": [[v.to_json() for v in r] for r in blk.data],
        })
    return doc


# -- pointed categories -------------------------------------------------------


def pointed_category(orders: list[int], q: dict, names: dict | None = None,
                     name: str = "pointed") -> Category:
    """Braided pointed category C(G, q) for G = Z/n1 x ... x Z/nk.

    `q` maps group elements (tuples) to Scalars and must be a quadratic
    form.  The associator 3-cocycle and braiding are reconstructed from q
    by the standard carry construction on each cyclic factor plus the
    bimultiplicative pairing between factors, so that R(g,g) = q(g) and
    all coherence equations hold.
    """
    k = len(orders)
    elements = [()]
    for n_i in orders:
        elements = [e + (x,) for e in elements for x in range(n_i)]
    elements.sort()

    def add(g, h):
        return tuple((x + y) % n_i for x, y, n_i in zip(g, h, orders))

    def neg(g):
        return tuple((-x) % n_i for x, n_i in zip(g, orders))

    zero = tuple(0 for _ in orders)
    qv = {g: q[g] for g in elements}
    if qv[zero] != rat(1):
        raise NotQuadratic("q(0) must be 1")
    for g in elements:
        if qv[g] != qv[neg(g)]:
            raise NotQuadratic(f"q({g}) != q(-{g})")

    def bform(g, h):
        return qv[add(g, h)] * (qv[g] * qv[h]).inverse()

    for g in elements:
        for h in elements:
            for l in elements:
                if bform(add(g, h), l) != bform(g, l) * bform(h, l):
                    raise NotQuadratic(
                        f"associated pairing not bimultiplicative at {(g, h, l)}")

    gens = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    xi = [qv[gens[i]] for i in range(k)]
    bgen = [[bform(gens[i], gens[j]) for j in range(k)] for i in range(k)]

    def braid(g, h):
        out = rat(1)
        for i in range(k):
            out = out * xi[i] ** (g[i] * h[i])
        for i in range(k):
            for j in range(k):
                if i < j:
                    out = out * bgen[i][j] ** (g[i] * h[j])
        return out

    def assoc(g, h, l):
        out = rat(1)
        for i in range(k):
            carry = (h[i] + l[i]) // orders[i]
            out = out * xi[i] ** (orders[i] * g[i] * carry)
        return out

    for g in elements:
        if braid(g, g) != qv[g]:
            raise NotQuadratic(f"carry construction does not reproduce q at {g}")

    if names is None:
        if k == 1:
            names = {g: str(g[0]) for g in elements}
        else:
            names = {g: "g" + "".join(str(x) for x in g) for g in elements}
    simples = [names[g] for g in elements]
    index = {g: i for i, g in enumerate(elements)}
    fusion = {(index[g], index[h], index[add(g, h)]): 1
              for g in elements for h in elements}
    dual = [index[neg(g)] for g in elements]
    qdim = [rat(1)] * len(elements)
    conductor = 1
    for g in elements:
        conductor = conductor * qv[g].N // gcd(conductor, qv[g].N)
    f_blocks = {}
    r_blocks = {}
    for g in elements:
        for h in elements:
            r_blocks[(index[g], index[h], index[add(g, h)])] = \
                ScalarMatrix([[braid(g, h)]])
            for l in elements:
                d = add(add(g, h), l)
                f_blocks[(index[g], index[h], index[l], index[d])] = \
                    ScalarMatrix([[assoc(g, h, l)]])
    cat = Category(name, simples, names[zero], fusion, dual, qdim,
                   f_blocks, r_blocks, conductor)
    validate_category(cat)
    return cat


# -- object-level helpers ------------------------------------------------------


def fusion_product(cat: Category, xs: dict, ys: dict) -> dict:
    """Multiset tensor product: multiplicity of c is sum N_ab^c over pairs."""
    out: dict[int, int] = {}
    for a, ma in xs.items():
        for b, mb in ys.items():
            for c, m in cat.channels(a, b):
                out[c] = out.get(c, 0) + ma * mb * m
    return {c: m for c, m in sorted(out.items()) if m}


def total_dim(cat: Category, xs: dict) -> Scalar:
    return cat.dim(xs)
