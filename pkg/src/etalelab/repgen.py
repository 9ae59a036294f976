"""Generate the skeletal braided category Rep(S3) and its regular algebra
from concrete rational representation matrices.

All 6j-data is derived, not transcribed: intertwiners are exact nullspace
computations, F-symbols solve the change of fusion-tree basis, R-symbols
come from the flip, and the regular algebra multiplication is decomposed
through explicit Peter-Weyl embeddings into the function algebra.
"""

from __future__ import annotations

from itertools import permutations

from .algebras import AlgebraObj, object_from_multiset
from .diagrams import Mor, fusion_basis, tensor_obj, unit_obj
from .errors import SchemaError
from .fusion import Category
from .linalg import ScalarMatrix, nullspace, solve
from .scalars import ONE, ZERO, rat


def _elements():
    return sorted(permutations(range(3)))


def _compose(p, q):
    # (p q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(3))


def _inverse(p):
    inv = [0, 0, 0]
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _sign(p):
    s = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if p[i] > p[j]:
                s = -s
    return s


def _std_matrix(p):
    """Action on the root plane x0+x1+x2 = 0 in basis (1,-1,0), (0,1,-1)."""
    cols = []
    for basis_vec in ((1, -1, 0), (0, 1, -1)):
        img = [basis_vec[_inverse(p)[i]] for i in range(3)]
        cols.append((img[0], -img[2]))
    return ScalarMatrix([[rat(cols[0][0]), rat(cols[1][0])],
                         [rat(cols[0][1]), rat(cols[1][1])]])


def _irreps():
    els = _elements()
    reps = {"1": [], "s": [], "V": []}
    for p in els:
        reps["1"].append(ScalarMatrix([[ONE]]))
        reps["s"].append(ScalarMatrix([[rat(_sign(p))]]))
        reps["V"].append(_std_matrix(p))
    return els, reps


def _kron(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    out = ScalarMatrix.zeros(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            v = a.data[i][j]
            if v.is_zero():
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    w = b.data[k][l]
                    if not w.is_zero():
                        out.data[i * b.rows + k][j * b.cols + l] = v * w
    return out


def _vec(m: ScalarMatrix):
    return [m.data[i][j] for i in range(m.rows) for j in range(m.cols)]


def _intertwiner(reps, gens, a, b, c):
    """Canonical embedding W_c -> W_a (x) W_b, exact and deterministic."""
    da = reps[a][0].rows
    db = reps[b][0].rows
    dc = reps[c][0].rows
    rows = []
    for g in gens:
        big = _kron(reps[a][g], reps[b][g])
        small = reps[c][g]
        # constraint big K - K small = 0, unknowns K[k][l]
        for r in range(da * db):
            for col in range(dc):
                row = [ZERO] * (da * db * dc)
                for k in range(da * db):
                    row[k * dc + col] = row[k * dc + col] + big.data[r][k]
                for l in range(dc):
                    row[r * dc + l] = row[r * dc + l] - small.data[l][col]
                rows.append(row)
    basis = nullspace(ScalarMatrix(rows))
    if len(basis) != 1:
        raise SchemaError(f"intertwiner space ({a},{b};{c}) has dim {len(basis)}")
    v = basis[0]
    return ScalarMatrix([[v[r * dc + col] for col in range(dc)]
                         for r in range(da * db)])


def rep_s3_category() -> Category:
    """The skeletal symmetric category Rep(S3) over the rationals."""
    els, reps = _irreps()
    gens = [els.index((1, 0, 2)), els.index((1, 2, 0))]
    names = ["1", "s", "V"]
    fusion_rules = {("1",): None}
    n = {}
    # fusion multiplicities from character inner products, hand-checkable:
    table = {("1", "1"): {"1": 1}, ("1", "s"): {"s": 1}, ("1", "V"): {"V": 1},
             ("s", "1"): {"s": 1}, ("s", "s"): {"1": 1}, ("s", "V"): {"V": 1},
             ("V", "1"): {"V": 1}, ("V", "s"): {"V": 1},
             ("V", "V"): {"1": 1, "s": 1, "V": 1}}
    idx = {s: i for i, s in enumerate(names)}
    for (a, b), chans in table.items():
        for c, m in chans.items():
            n[(idx[a], idx[b], idx[c])] = m
    dims = {"1": 1, "s": 1, "V": 2}

    kappa = {}
    for (a, b), chans in table.items():
        for c in chans:
            if a == "1":
                kappa[(a, b, c)] = ScalarMatrix.identity(dims[b])
            elif b == "1":
                kappa[(a, b, c)] = ScalarMatrix.identity(dims[a])
            else:
                kappa[(a, b, c)] = _intertwiner(reps, gens, a, b, c)

    def left_trees(a, b, c, d):
        out = []
        for e in table[(a, b)]:
            if d in table[(e, c)]:
                big = _kron(kappa[(a, b, e)], ScalarMatrix.identity(dims[c]))
                out.append((e, big @ kappa[(e, c, d)]))
        return out

    def right_trees(a, b, c, d):
        out = []
        for f in table[(b, c)]:
            if d in table[(a, f)]:
                big = _kron(ScalarMatrix.identity(dims[a]), kappa[(b, c, f)])
                out.append((f, big @ kappa[(a, f, d)]))
        return out

    f_blocks = {}
    for a in names:
        for b in names:
            for c in names:
                for d in names:
                    lt = left_trees(a, b, c, d)
                    rt = right_trees(a, b, c, d)
                    if not lt:
                        continue
                    cols = ScalarMatrix(
                        [[_vec(t)[r] for _, t in rt]
                         for r in range(dims[a] * dims[b] * dims[c] * dims[d])])
                    block = []
                    for _, t in lt:
                        coeffs, _ = solve(cols, _vec(t))
                        block.append(coeffs)
                    f_blocks[(idx[a], idx[b], idx[c], idx[d])] = \
                        ScalarMatrix(block)

    r_blocks = {}
    for a in names:
        for b in names:
            for c in table[(a, b)]:
                flip = ScalarMatrix.zeros(dims[b] * dims[a], dims[a] * dims[b])
                for i in range(dims[a]):
                    for j in range(dims[b]):
                        flip.data[j * dims[a] + i][i * dims[b] + j] = ONE
                flipped = flip @ kappa[(a, b, c)]
                cols = ScalarMatrix([[_vec(kappa[(b, a, c)])[r]]
                                     for r in range(dims[b] * dims[a] * dims[c])])
                coeffs, _ = solve(cols, _vec(flipped))
                r_blocks[(idx[a], idx[b], idx[c])] = ScalarMatrix([[coeffs[0]]])

    return Category("rep-s3", names, "1", n, [0, 1, 2],
                    [rat(1), rat(1), rat(2)], f_blocks, r_blocks, conductor=1)


def rep_s3_regular_algebra(cat: Category) -> AlgebraObj:
    """The function algebra k(S3) as an algebra on 1 + s + 2V in Rep(S3)."""
    els, reps = _irreps()
    names = ["1", "s", "V"]
    dims = {"1": 1, "s": 1, "V": 2}
    gens = [els.index((1, 0, 2)), els.index((1, 2, 0))]
    kappa = {}

    obj = object_from_multiset(cat, {"1": 1, "s": 1, "V": 2})
    # Peter-Weyl embeddings W_a -> k(S3), one per occurrence
    embeddings = []  # aligned with obj positions
    for pos, si in enumerate(obj.simples):
        a = names[si]
        k = sum(1 for q in obj.simples[:pos] if q == si)
        emb = ScalarMatrix.zeros(6, dims[a])
        for x, p in enumerate(els):
            inv = els.index(_inverse(p))
            for j in range(dims[a]):
                emb.data[x][j] = reps[a][inv].data[k][j]
        embeddings.append(emb)

    # pointwise multiplication of delta functions
    point = ScalarMatrix.zeros(6, 36)
    for x in range(6):
        point.data[x][x * 6 + x] = ONE

    basis = fusion_basis(cat, obj, obj)
    mat = ScalarMatrix.zeros(len(obj), len(basis))
    for kdx, (i, j, c, _mu) in enumerate(basis):
        a = names[obj.simples[i]]
        b = names[obj.simples[j]]
        cn = names[c]
        key = (a, b, cn)
        if key not in kappa:
            if a == "1":
                kappa[key] = ScalarMatrix.identity(dims[b])
            elif b == "1":
                kappa[key] = ScalarMatrix.identity(dims[a])
            else:
                kappa[key] = _intertwiner(reps, gens, a, b, cn)
        concrete = point @ _kron(embeddings[i], embeddings[j]) @ kappa[key]
        targets = [t for t in range(len(obj)) if obj.simples[t] == c]
        cols = ScalarMatrix([[_vec(embeddings[t])[r] for t in targets]
                             for r in range(6 * dims[cn])])
        coeffs, _ = solve(cols, _vec(concrete))
        for t, v in zip(targets, coeffs):
            mat.data[t][kdx] = v

    umat = ScalarMatrix.zeros(len(obj), 1)
    umat.data[0][0] = ONE  # the constant function 1 is the trivial embedding
    return AlgebraObj(cat, obj, Mor(tensor_obj(obj, obj), obj, mat),
                      Mor(unit_obj(cat), obj, umat), name="rep-s3-regular")


def rep_s3_translations(a: AlgebraObj):
    """The six right-translation automorphisms of the regular algebra.

    Returns (mors, table): exact endomorphisms of the regular object in
    the same element order as the group, and the multiplication table
    table[i][j] = index of g_i g_j, so mors[i] @ mors[j] == mors[table[i][j]].
    """
    els, reps = _irreps()
    names = ["1", "s", "V"]
    dims = {"1": 1, "s": 1, "V": 2}
    obj = a.obj
    embeddings = []
    for pos, si in enumerate(obj.simples):
        nm = names[si]
        k = sum(1 for q in obj.simples[:pos] if q == si)
        emb = ScalarMatrix.zeros(6, dims[nm])
        for x, p in enumerate(els):
            inv = els.index(_inverse(p))
            for j in range(dims[nm]):
                emb.data[x][j] = reps[nm][inv].data[k][j]
        embeddings.append(emb)

    mors = []
    for g in els:
        ginv = _inverse(g)
        perm = ScalarMatrix.zeros(6, 6)
        for x, p in enumerate(els):
            perm.data[els.index(_compose(p, ginv))][x] = ONE
        mat = ScalarMatrix.zeros(len(obj), len(obj))
        for u in range(len(obj)):
            concrete = perm @ embeddings[u]
            targets = [t for t in range(len(obj))
                       if obj.simples[t] == obj.simples[u]]
            cols = ScalarMatrix([[_vec(embeddings[t])[r] for t in targets]
                                 for r in range(6 * concrete.cols)])
            coeffs, _ = solve(cols, _vec(concrete))
            for t, v in zip(targets, coeffs):
                mat.data[t][u] = v
        mors.append(Mor(obj, obj, mat))
    table = [[els.index(_compose(p, q)) for q in els] for p in els]
    return mors, table
