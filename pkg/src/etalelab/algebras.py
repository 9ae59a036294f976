"""Algebras internal to a braided fusion category: axioms, connectedness,
separability data (counit and splitting coproduct), and the etale predicate."""

from __future__ import annotations

from .diagrams import (Mor, Obj, associator, braiding_mor, cap2, cup,
                       fusion_basis, hom_dim, mor_solve, tensor_mor,
                       tensor_obj, unit_obj)
from .errors import (Infeasible, NotConnected, OrientationMismatch,
                     SchemaError, SeparabilityFailure, ShapeMismatch)
from .fusion import Category
from .linalg import ScalarMatrix
from .scalars import ONE, Scalar, rat


class AlgebraObj:
    """An algebra (A, m, i) in a braided fusion category.

    `obj` is the underlying direct sum of simples, `mult` the
    multiplication decomp(A (x) A) -> A, and `unit` the unit I -> A.
    Separability data (counit, coproduct, dimension) is computed lazily
    and cached.
    """

    def __init__(self, cat: Category, obj: Obj, mult: Mor, unit: Mor,
                 name: str = "algebra") -> None:
        if mult.dom != tensor_obj(obj, obj) or mult.cod != obj:
            raise ShapeMismatch("mult must map decomp(A (x) A) to A")
        if unit.dom != unit_obj(cat) or unit.cod != obj:
            raise ShapeMismatch("unit must map I to A")
        self.cat = cat
        self.obj = obj
        self.mult = mult
        self.unit = unit
        self.name = name
        self._sep = None

    @property
    def dim(self) -> Scalar:
        return self.obj.dim()

    def __repr__(self):
        return f"AlgebraObj({self.name!r}, {self.obj!r})"


# -- axioms ----------------------------------------------------------------


def check_associative(a: AlgebraObj):
    """Exact check of m(m x 1) = m(1 x m) alpha; returns (ok, witness)."""
    one = Mor.identity(a.obj)
    left = a.mult @ tensor_mor(a.mult, one)
    right = a.mult @ tensor_mor(one, a.mult) @ associator(a.obj, a.obj, a.obj)
    diff = left - right
    if diff.is_zero():
        return True, None
    basis = fusion_basis(a.cat, tensor_obj(a.obj, a.obj), a.obj)
    for j in range(diff.mat.rows):
        for i in range(diff.mat.cols):
            if not diff.mat.data[j][i].is_zero():
                return False, (j, i)
    return False, None


def check_unital(a: AlgebraObj):
    """m(i x 1) = m(1 x i) = id, using the strict unit identifications."""
    one = Mor.identity(a.obj)
    left = a.mult @ tensor_mor(a.unit, one)
    right = a.mult @ tensor_mor(one, a.unit)
    return left == one and right == one


def check_commutative(a: AlgebraObj):
    """m braiding = m; returns (ok, witness channel) exactly."""
    diff = a.mult @ braiding_mor(a.obj, a.obj) - a.mult
    if diff.is_zero():
        return True, None
    basis = fusion_basis(a.cat, a.obj, a.obj)
    for j in range(diff.mat.rows):
        for i in range(diff.mat.cols):
            if not diff.mat.data[j][i].is_zero():
                bi, bj, c, _ = basis[i]
                names = a.cat.simples
                return False, (names[a.obj.simples[bi]],
                               names[a.obj.simples[bj]], names[c])
    return False, None


def check_connected(a: AlgebraObj) -> bool:
    return hom_dim(unit_obj(a.cat), a.obj) == 1


# -- separability ------------------------------------------------------------


def counit_diagram(a: AlgebraObj) -> Mor:
    """The counit as the right closure of m: trace out the second strand."""
    A = a.obj
    one = Mor.identity(A)
    comp = cap2(A) @ tensor_mor(a.mult, Mor.identity(A.dual)) \
        @ associator(A, A, A.dual, inverse=True) \
        @ tensor_mor(one, cup(A))
    return comp


def compute_separability(a: AlgebraObj):
    """Compute (counit, coproduct, d(A)) for a separable algebra.

    The coproduct is the exact solution of the bimodule splitting system;
    the counit comes from the closure diagram, cross-checked against the
    normalisation counit . unit = d(A).  Raises SeparabilityFailure when
    no splitting exists.  Returns (eps, mdual, dA, unique) where `unique`
    is False when the splitting system has extra degrees of freedom.
    """
    if a._sep is not None:
        return a._sep
    A = a.obj
    dA = a.dim
    if abs(dA.embed()) < 1e-12:
        raise SeparabilityFailure("d(A) = 0")
    one = Mor.identity(A)
    aa = tensor_obj(A, A)
    alpha = associator(A, A, A)
    alpha_inv = associator(A, A, A, inverse=True)

    def constraints(delta):
        left = tensor_mor(a.mult, one) @ alpha_inv @ tensor_mor(one, delta)
        right = tensor_mor(one, a.mult) @ alpha @ tensor_mor(delta, one)
        return [a.mult @ delta, delta @ a.mult - left, delta @ a.mult - right]

    target = [Mor.identity(A), Mor.zero(aa, aa), Mor.zero(aa, aa)]
    try:
        mdual, null = mor_solve(A, aa, constraints, target)
    except Infeasible as exc:
        raise SeparabilityFailure(
            f"no bimodule splitting of m exists: {exc}") from exc
    unique = not null
    eps = counit_diagram(a)
    check = (eps @ a.unit).mat.data[0][0]
    if check != dA:
        raise OrientationMismatch(
            f"closure diagram gives eps.unit = {check}, expected {dA}")
    a._sep = (eps, mdual, dA, unique)
    return a._sep


def is_etale(a: AlgebraObj) -> dict:
    """Verdict report: commutative + separable + connected."""
    assoc, assoc_witness = check_associative(a)
    comm, comm_witness = check_commutative(a)
    report = {
        "algebra": a.name,
        "associative": assoc,
        "unital": check_unital(a),
        "commutative": comm,
        "connected": check_connected(a),
    }
    if not comm and comm_witness:
        report["commutativity_witness"] = list(comm_witness)
    try:
        eps, mdual, dA, unique = compute_separability(a)
        report["separable"] = True
        report["unique_splitting"] = unique
        report["dim"] = dA.to_json()
        # commutativity is mirrored by cocommutativity of the splitting
        report["cocommutative"] = (braiding_mor(a.obj, a.obj) @ mdual == mdual)
    except (SeparabilityFailure, OrientationMismatch) as exc:
        report["separable"] = False
        report["separability_error"] = str(exc)
    report["etale"] = bool(report["associative"] and report["unital"]
                           and report["commutative"] and report["connected"]
                           and report.get("separable"))
    return report


def unit_component(f: Mor, a: AlgebraObj) -> Scalar:
    """The scalar c with f = c . unit, for connected algebras."""
    if not check_connected(a):
        raise NotConnected(f"{a.name} is not connected")
    eps, _, dA, _ = compute_separability(a)
    return (eps @ f).mat.data[0][0] * dA.inverse()


def frobenius_gram(a: AlgebraObj) -> ScalarMatrix:
    """Gram matrix of the pairing eps . m between the summands of A."""
    eps, _, _, _ = compute_separability(a)
    pairing = eps @ a.mult
    basis = fusion_basis(a.cat, a.obj, a.obj)
    n = len(a.obj)
    gram = ScalarMatrix.zeros(n, n)
    for idx, (i, j, _c, _mu) in enumerate(basis):
        v = pairing.mat.data[0][idx]
        if not v.is_zero():
            gram.data[i][j] = gram.data[i][j] + v
    return gram


# -- document I/O ------------------------------------------------------------


def object_from_multiset(cat: Category, multiset: dict) -> Obj:
    """Canonical Obj from {simple name: multiplicity}, in simple order."""
    simples = []
    for s in cat.simples:
        m = int(multiset.get(s, 0))
        if m < 0:
            raise SchemaError("negative multiplicity")
        simples.extend([cat.index[s]] * m)
    return Obj(cat, simples)


def _occurrence_positions(obj: Obj):
    pos: dict[tuple, int] = {}
    seen: dict[int, int] = {}
    for i, s in enumerate(obj.simples):
        pos[(s, seen.get(s, 0))] = i
        seen[s] = seen.get(s, 0) + 1
    return pos


def load_algebra(cat: Category, doc: dict, name: str | None = None) -> AlgebraObj:
    """Parse an algebra document (see README for the schema)."""
    try:
        obj = object_from_multiset(cat, doc["object"])
        mult_entries = doc["mult"]
        unit_entries = doc["unit"]
    except KeyError as exc:
        raise SchemaError(f"malformed algebra document: missing {exc}") from exc
    pos = _occurrence_positions(obj)
    basis = fusion_basis(cat, obj, obj)
    bindex = {b: k for k, b in enumerate(basis)}
    mat = ScalarMatrix.zeros(len(obj), len(basis))
    for entry in mult_entries:
        try:
            sa, oa, sb, ob_, sc, mu = entry["from"]
            st, ot = entry["to"]
            value = Scalar.from_json(entry["value"])
            i = pos[(cat.index[sa], int(oa))]
            j = pos[(cat.index[sb], int(ob_))]
            k = bindex[(i, j, cat.index[sc], int(mu))]
            t = pos[(cat.index[st], int(ot))]
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"malformed mult entry {entry}: {exc}") from exc
        if cat.index[st] != cat.index[sc]:
            raise SchemaError(
                f"mult entry {entry} maps channel {sc} to simple {st}")
        mat.data[t][k] = value
    umat = ScalarMatrix.zeros(len(obj), 1)
    for entry in unit_entries:
        try:
            st, ot = entry["to"]
            umat.data[pos[(cat.index[st], int(ot))]][0] = \
                Scalar.from_json(entry["value"])
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"malformed unit entry {entry}: {exc}") from exc
    mult = Mor(tensor_obj(obj, obj), obj, mat)
    unit = Mor(unit_obj(cat), obj, umat)
    return AlgebraObj(cat, obj, mult, unit,
                      name=name or doc.get("name", "algebra"))


def algebra_to_doc(a: AlgebraObj) -> dict:
    cat = a.cat
    multiset: dict[str, int] = {}
    for s in a.obj.simples:
        multiset[cat.simples[s]] = multiset.get(cat.simples[s], 0) + 1
    occ_of = {}
    seen: dict[int, int] = {}
    for i, s in enumerate(a.obj.simples):
        occ_of[i] = (cat.simples[s], seen.get(s, 0))
        seen[s] = seen.get(s, 0) + 1
    basis = fusion_basis(cat, a.obj, a.obj)
    mult_entries = []
    for k, (i, j, c, mu) in enumerate(basis):
        for t in range(len(a.obj)):
            v = a.mult.mat.data[t][k]
            if v.is_zero():
                continue
            sa, oa = occ_of[i]
            sb, ob_ = occ_of[j]
            st, ot = occ_of[t]
            mult_entries.append({"from": [sa, oa, sb, ob_, cat.simples[c], mu],
                                 "to": [st, ot], "value": v.to_json()})
    unit_entries = []
    for t in range(len(a.obj)):
        v = a.unit.mat.data[t][0]
        if not v.is_zero():
            st, ot = occ_of[t]
            unit_entries.append({"to": [st, ot], "value": v.to_json()})
    return {"name": a.name, "category": cat.name, "object": multiset,
            "mult": mult_entries, "unit": unit_entries}


# -- simple constructors -------------------------------------------------------


def trivial_algebra(cat: Category) -> AlgebraObj:
    """The unit object with its canonical algebra structure."""
    obj = unit_obj(cat)
    return AlgebraObj(cat, obj, Mor.identity(obj), Mor.identity(obj),
                      name="unit")


def pointed_subgroup_algebra(cat: Category, members: list[str],
                             cocycle: dict | None = None,
                             name: str | None = None) -> AlgebraObj:
    """Algebra on a subgroup of simples of a pointed category.

    `members` must be closed under fusion and contain the unit; `cocycle`
    optionally gives the multiplication coefficient for each pair of member
    names (default 1, which requires the restricted associator to be
    trivial).
    """
    idx = [cat.index[s] for s in members]
    obj = Obj(cat, sorted(idx))
    basis = fusion_basis(cat, obj, obj)
    mat = ScalarMatrix.zeros(len(obj), len(basis))
    posn = {s: p for p, s in enumerate(obj.simples)}
    for k, (i, j, c, _mu) in enumerate(basis):
        if c not in posn:
            raise SchemaError(f"members not closed under fusion")
        coeff = ONE
        if cocycle is not None:
            coeff = cocycle[(cat.simples[obj.simples[i]],
                             cat.simples[obj.simples[j]])]
        mat.data[posn[c]][k] = coeff
    umat = ScalarMatrix.zeros(len(obj), 1)
    umat.data[posn[cat.unit]][0] = ONE
    alg = AlgebraObj(cat, obj,
                     Mor(tensor_obj(obj, obj), obj, mat),
                     Mor(unit_obj(cat), obj, umat),
                     name=name or "k[" + " ".join(members) + "]")
    return alg
