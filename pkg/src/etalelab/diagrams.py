"""String-diagram evaluation in a skeletal braided fusion category.

Objects are ordered direct sums of simples; morphisms are matrices of
scalars, one entry per pair of matching simple summands (Schur's lemma).
Tensor products are mediated by a canonical fusion basis, and the
structural morphisms (associator, braiding, duality cups and caps) are
assembled from the category's F- and R-symbols.
"""

from __future__ import annotations

from .errors import ShapeMismatch
from .fusion import Category
from .linalg import ScalarMatrix, invert, solve
from .scalars import ONE, ZERO, Scalar, rat


class Obj:
    """An ordered direct sum of simple objects, as a list of indices."""

    __slots__ = ("cat", "simples")

    def __init__(self, cat: Category, simples: list[int]) -> None:
        self.cat = cat
        self.simples = list(simples)

    def __len__(self):
        return len(self.simples)

    def __eq__(self, other):
        if not isinstance(other, Obj):
            return NotImplemented
        return self.cat is other.cat and self.simples == other.simples

    def __hash__(self):
        return hash((id(self.cat), tuple(self.simples)))

    @property
    def dual(self) -> "Obj":
        return Obj(self.cat, [self.cat.dual[s] for s in reversed(self.simples)])

    def dim(self) -> Scalar:
        total = ZERO
        for s in self.simples:
            total = total + self.cat.qdim[s]
        return total

    def __repr__(self):
        return "Obj(" + " + ".join(self.cat.simples[s] for s in self.simples) + ")"


def unit_obj(cat: Category) -> Obj:
    return Obj(cat, [cat.unit])


class Mor:
    """A morphism between direct sums of simples.

    Stored as a codomain x domain matrix; the (j, i) entry lives in
    Hom(dom_i, cod_j) and must vanish unless the simples agree.
    """

    __slots__ = ("dom", "cod", "mat")

    def __init__(self, dom: Obj, cod: Obj, mat: ScalarMatrix) -> None:
        if mat.rows != len(cod) or mat.cols != len(dom):
            raise ShapeMismatch(
                f"morphism matrix {mat.rows}x{mat.cols} does not match "
                f"{len(cod)}x{len(dom)}")
        for j, s in enumerate(cod.simples):
            for i, t in enumerate(dom.simples):
                if s != t and not mat.data[j][i].is_zero():
                    raise ShapeMismatch(
                        "nonzero entry between distinct simples "
                        f"{dom.cat.simples[t]} -> {cod.cat.simples[s]}")
        self.dom = dom
        self.cod = cod
        self.mat = mat

    @staticmethod
    def identity(x: Obj) -> "Mor":
        return Mor(x, x, ScalarMatrix.identity(len(x)))

    @staticmethod
    def zero(dom: Obj, cod: Obj) -> "Mor":
        return Mor(dom, cod, ScalarMatrix.zeros(len(cod), len(dom)))

    def __matmul__(self, other: "Mor") -> "Mor":
        """Composition self . other (other applied first)."""
        if other.cod != self.dom:
            raise ShapeMismatch("composition domain mismatch")
        return Mor(other.dom, self.cod, self.mat @ other.mat)

    def __add__(self, other: "Mor") -> "Mor":
        if self.dom != other.dom or self.cod != other.cod:
            raise ShapeMismatch("sum of morphisms with different ends")
        return Mor(self.dom, self.cod, self.mat + other.mat)

    def __sub__(self, other: "Mor") -> "Mor":
        return self + other.scale(rat(-1))

    def scale(self, s: Scalar) -> "Mor":
        return Mor(self.dom, self.cod, self.mat.scale(s))

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.mat == other.mat)

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def inverse(self) -> "Mor":
        if len(self.dom) != len(self.cod):
            raise ShapeMismatch("inverse of non-square morphism")
        return Mor(self.cod, self.dom, invert(self.mat))

    def __repr__(self):
        return f"Mor({self.dom!r} -> {self.cod!r})"


# -- tensor product ------------------------------------------------------------


def fusion_basis(cat: Category, x: Obj, y: Obj) -> list[tuple]:
    """Canonical ordered basis of the decomposition of x (x) y.

    Entries are (i, j, c, mu): position i in x, position j in y, fusion
    channel c of x_i (x) y_j, multiplicity index mu.  Lexicographic order.
    """
    basis = []
    for i, a in enumerate(x.simples):
        for j, b in enumerate(y.simples):
            for c, m in cat.channels(a, b):
                for mu in range(m):
                    basis.append((i, j, c, mu))
    return basis


def tensor_obj(x: Obj, y: Obj) -> Obj:
    cat = x.cat
    return Obj(cat, [c for (_, _, c, _) in fusion_basis(cat, x, y)])


def tensor_mor(f: Mor, g: Mor) -> Mor:
    """Tensor product of morphisms in the canonical fusion bases."""
    cat = f.dom.cat
    dom = tensor_obj(f.dom, g.dom)
    cod = tensor_obj(f.cod, g.cod)
    dbasis = fusion_basis(cat, f.dom, g.dom)
    cbasis = fusion_basis(cat, f.cod, g.cod)
    cindex = {}
    for r, key in enumerate(cbasis):
        cindex.setdefault(key[2:], []).append((r, key[0], key[1]))
    mat = ScalarMatrix.zeros(len(cbasis), len(dbasis))
    for cidx, (i, j, c, mu) in enumerate(dbasis):
        for r, ii, jj in cindex.get((c, mu), []):
            a = f.mat.data[ii][i]
            if a.is_zero():
                continue
            b = g.mat.data[jj][j]
            if not b.is_zero():
                mat.data[r][cidx] = a * b
    return Mor(dom, cod, mat)


# -- structural morphisms -------------------------------------------------------


def associator(x: Obj, y: Obj, z: Obj, inverse: bool = False) -> Mor:
    """The associator (x (x) y) (x) z -> x (x) (y (x) z) built from F."""
    cat = x.cat
    xy = tensor_obj(x, y)
    yz = tensor_obj(y, z)
    dom = tensor_obj(xy, z)
    cod = tensor_obj(x, yz)
    xy_basis = fusion_basis(cat, x, y)
    yz_basis = fusion_basis(cat, y, z)
    lbasis = fusion_basis(cat, xy, z)
    rbasis = fusion_basis(cat, x, yz)
    # group right-basis entries by (i, j, k, d) for direct lookup
    rindex = {}
    for ridx, (i, q, d, sigma) in enumerate(rbasis):
        j, k, f, rho = yz_basis[q]
        rindex.setdefault((i, j, k, d), []).append((ridx, (f, rho, sigma)))
    fcache = {}
    mat = ScalarMatrix.zeros(len(rbasis), len(lbasis))
    for lidx, (p, k, d, nu) in enumerate(lbasis):
        i, j, e, mu = xy_basis[p]
        a, b, c = x.simples[i], y.simples[j], z.simples[k]
        key = (a, b, c, d)
        if key not in fcache:
            blk = cat.f_block(*key)
            if inverse:
                blk = invert(blk)
            fcache[key] = (blk, {t: n for n, t in
                                 enumerate(cat.left_tree_basis(*key))},
                           {t: n for n, t in
                            enumerate(cat.right_tree_basis(*key))})
        blk, lpos, rpos = fcache[key]
        row = lpos[(e, mu, nu)]
        for ridx, tri in rindex.get((i, j, k, d), []):
            col = rpos[tri]
            v = blk.data[col][row] if inverse else blk.data[row][col]
            if not v.is_zero():
                mat.data[ridx][lidx] = v
    if inverse:
        return Mor(cod, dom, mat.transpose())
    return Mor(dom, cod, mat)


def braiding_mor(x: Obj, y: Obj, inverse: bool = False) -> Mor:
    """The braiding x (x) y -> y (x) x built from R (or its inverse)."""
    cat = x.cat
    dom = tensor_obj(x, y)
    cod = tensor_obj(y, x)
    dbasis = fusion_basis(cat, x, y)
    cbasis = fusion_basis(cat, y, x)
    cindex = {key: r for r, key in enumerate(cbasis)}
    rcache = {}
    mat = ScalarMatrix.zeros(len(cbasis), len(dbasis))
    for cidx, (i, j, c, mu) in enumerate(dbasis):
        a, b = x.simples[i], y.simples[j]
        key = (a, b, c)
        if key not in rcache:
            blk = cat.r_block(a, b, c)
            rcache[key] = invert(blk) if inverse else blk
        blk = rcache[key]
        for nu in range(cat.n(b, a, c)):
            v = blk.data[mu][nu] if inverse else blk.data[nu][mu]
            if not v.is_zero():
                mat.data[cindex[(j, i, c, nu)]][cidx] = v
    if inverse:
        return Mor(cod, dom, mat.transpose())
    return Mor(dom, cod, mat)


def _f_unit_coeff(cat: Category, a: int) -> Scalar:
    """The (unit, unit) entry of F^{a a* a}_a, controlling the zigzag."""
    astar = cat.dual[a]
    key = (a, astar, a, a)
    blk = cat.f_block(*key)
    row = cat.left_tree_basis(*key).index((cat.unit, 0, 0))
    col = cat.right_tree_basis(*key).index((cat.unit, 0, 0))
    return blk.data[row][col]


def _paired(x: Obj, first_dual: bool):
    """Basis entries of x* (x) x (or x (x) x*) pairing mirrored positions."""
    n = len(x)
    cat = x.cat
    left = x.dual if first_dual else x
    right = x if first_dual else x.dual
    basis = fusion_basis(cat, left, right)
    out = []
    for idx, (i, j, c, mu) in enumerate(basis):
        if c == cat.unit and j == n - 1 - i:
            a = x.simples[j] if first_dual else x.simples[i]
            out.append((idx, a))
    return basis, out


def cup(x: Obj) -> Mor:
    """Coevaluation 1 -> x (x) x*."""
    cat = x.cat
    basis, pairs = _paired(x, first_dual=False)
    mat = ScalarMatrix.zeros(len(basis), 1)
    for idx, _a in pairs:
        mat.data[idx][0] = ONE
    return Mor(unit_obj(cat), Obj(cat, [b[2] for b in basis]), mat)


def cap(x: Obj) -> Mor:
    """Evaluation x* (x) x -> 1, normalised so the zigzag is the identity."""
    cat = x.cat
    basis, pairs = _paired(x, first_dual=True)
    mat = ScalarMatrix.zeros(1, len(basis))
    for idx, a in pairs:
        mat.data[0][idx] = _f_unit_coeff(cat, a).inverse()
    return Mor(Obj(cat, [b[2] for b in basis]), unit_obj(cat), mat)


def cap2(x: Obj) -> Mor:
    """Right evaluation x (x) x* -> 1 with quantum trace normalisation."""
    cat = x.cat
    basis, pairs = _paired(x, first_dual=False)
    mat = ScalarMatrix.zeros(1, len(basis))
    for idx, a in pairs:
        mat.data[0][idx] = cat.qdim[a]
    return Mor(Obj(cat, [b[2] for b in basis]), unit_obj(cat), mat)


def cup2(x: Obj) -> Mor:
    """Right coevaluation 1 -> x* (x) x, the mate of cap2."""
    cat = x.cat
    basis, pairs = _paired(x, first_dual=True)
    mat = ScalarMatrix.zeros(len(basis), 1)
    for idx, a in pairs:
        mat.data[idx][0] = cat.qdim[a] * _f_unit_coeff(cat, a)
    return Mor(unit_obj(cat), Obj(cat, [b[2] for b in basis]), mat)


def trace(f: Mor) -> Scalar:
    """Quantum trace of an endomorphism."""
    if f.dom != f.cod:
        raise ShapeMismatch("trace of non-endomorphism")
    cat = f.dom.cat
    total = ZERO
    for i, s in enumerate(f.dom.simples):
        total = total + cat.qdim[s] * f.mat.data[i][i]
    return total


def hom_dim(x: Obj, y: Obj) -> int:
    """Dimension of Hom(x, y)."""
    counts: dict[int, int] = {}
    for s in x.simples:
        counts[s] = counts.get(s, 0) + 1
    return sum(counts.get(s, 0) for s in y.simples)


def mor_to_json(f: Mor) -> dict:
    """Serialize a morphism in per-simple block form."""
    cat = f.dom.cat
    src = [cat.simples[s] for s in f.dom.simples]
    dst = [cat.simples[s] for s in f.cod.simples]
    blocks = {}
    for s in sorted(set(f.dom.simples) & set(f.cod.simples)):
        rows = [j for j, t in enumerate(f.cod.simples) if t == s]
        cols = [i for i, t in enumerate(f.dom.simples) if t == s]
        blocks[cat.simples[s]] = [[f.mat.data[j][i].to_json() for i in cols]
                                  for j in rows]
    return {"src": src, "dst": dst, "blocks": blocks}


def mor_from_json(cat: Category, doc: dict) -> Mor:
    """Inverse of mor_to_json."""
    try:
        dom = Obj(cat, [cat.index[s] for s in doc["src"]])
        cod = Obj(cat, [cat.index[s] for s in doc["dst"]])
        mat = ScalarMatrix.zeros(len(cod), len(dom))
        for sname, block in doc["blocks"].items():
            s = cat.index[sname]
            rows = [j for j, t in enumerate(cod.simples) if t == s]
            cols = [i for i, t in enumerate(dom.simples) if t == s]
            for bj, j in enumerate(rows):
                for bi, i in enumerate(cols):
                    mat.data[j][i] = Scalar.from_json(block[bj][bi])
    except (KeyError, ValueError, IndexError) as exc:
        raise ShapeMismatch(f"malformed morphism document: {exc}") from exc
    return Mor(dom, cod, mat)


# -- linear solving over morphism spaces ----------------------------------------


def _allowed_slots(dom: Obj, cod: Obj) -> list[tuple[int, int]]:
    return [(j, i) for j in range(len(cod)) for i in range(len(dom))
            if cod.simples[j] == dom.simples[i]]


def _elementary(dom: Obj, cod: Obj, slot: tuple[int, int]) -> Mor:
    mat = ScalarMatrix.zeros(len(cod), len(dom))
    mat.data[slot[0]][slot[1]] = ONE
    return Mor(dom, cod, mat)


def from_slots(dom: Obj, cod: Obj, coeffs: list[Scalar]) -> Mor:
    slots = _allowed_slots(dom, cod)
    mat = ScalarMatrix.zeros(len(cod), len(dom))
    for (j, i), v in zip(slots, coeffs):
        mat.data[j][i] = v
    return Mor(dom, cod, mat)


def mor_solve(dom: Obj, cod: Obj, apply_map, rhs) -> tuple[Mor, list[Mor]]:
    """Solve a linear morphism equation apply_map(T) = rhs for T: dom -> cod.

    `apply_map` maps a Mor to a Mor or a list of Mors (linearly) and `rhs`
    matches its output shape.  Returns (particular solution, nullspace
    basis of the homogeneous equation); raises Infeasible when unsolvable.
    """
    slots = _allowed_slots(dom, cod)
    if isinstance(rhs, Mor):
        rhs = [rhs]

    def flatten(mors):
        out = []
        for m in mors:
            for row in m.mat.data:
                out.extend(row)
        return out

    columns = []
    for slot in slots:
        image = apply_map(_elementary(dom, cod, slot))
        if isinstance(image, Mor):
            image = [image]
        columns.append(flatten(image))
    target = flatten(rhs)
    # keep only rows where some column or the target is nonzero, and
    # dedupe repeated equations; the system is typically very sparse
    rows = []
    seen = set()
    for r in range(len(target)):
        row = [columns[k][r] for k in range(len(slots))] + [target[r]]
        if all(v.is_zero() for v in row):
            continue
        key = tuple(repr(v) for v in row)
        if key in seen:
            continue
        seen.add(key)
        rows.append(row)
    if not rows:
        rows = [[ZERO] * (len(slots) + 1)]
    system = ScalarMatrix([row[:-1] for row in rows],
                          len(rows), len(slots))
    particular, null = solve(system, [row[-1] for row in rows])
    return (from_slots(dom, cod, particular),
            [from_slots(dom, cod, v) for v in null])
