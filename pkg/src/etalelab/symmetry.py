"""Automorphism groups of etale algebras, the Galois test, dimension
bounds, maximal symmetry, and the checkable Tannakian consequences."""

from __future__ import annotations

from .algebras import AlgebraObj
from .convolution import (ConvolutionAlgebra, Hypergroup,
                          hypergroup_constants, is_algebra_automorphism)
from .diagrams import Mor, Obj, braiding_mor, hom_dim, tensor_obj
from .errors import (BoundViolation, LemmaAlViolation, ResidualTooLarge,
                     SingularBasis)
from .scalars import Scalar, rat


class AutomorphismGroup:
    """Aut_alg(A) as a list of exact morphisms with its composition table."""

    def __init__(self, elements: list[Mor], table: list[list[int]],
                 name: str | None) -> None:
        self.elements = elements
        self.table = table
        self.name = name

    @property
    def size(self) -> int:
        return len(self.elements)


def automorphism_group(a: AlgebraObj, h: Hypergroup) -> AutomorphismGroup:
    """Filter the minimal idempotents of Q(A) down to Aut_alg(A).

    Every algebra automorphism is a minimal idempotent of the convolution
    algebra, so the hypergroup is a complete search space.
    """
    candidates = h.mors()  # raises ResidualTooLarge when not exact
    elements = [g for g in candidates if is_algebra_automorphism(a, g)]
    table = []
    lookup = {id(g): i for i, g in enumerate(elements)}
    for g in elements:
        row = []
        for k in elements:
            comp = g @ k
            hits = [i for i, e in enumerate(elements) if e == comp]
            if len(hits) != 1:
                raise ResidualTooLarge(
                    "automorphism composition left the candidate set")
            row.append(hits[0])
        table.append(row)
    ident = [i for i in range(len(elements))
             if elements[i] == Mor.identity(a.obj)]
    if len(elements) and len(ident) != 1:
        raise ResidualTooLarge("automorphism set lacks the identity")
    return AutomorphismGroup(elements, table, recognize_group(table))


def recognize_group(table: list[list[int]]) -> str | None:
    """Identify a group of order <= 12 from its multiplication table."""
    n = len(table)
    if n == 0:
        return None
    ident = next(i for i in range(n)
                 if all(table[i][j] == j for j in range(n)))

    def order(g):
        k, x = 1, g
        while x != ident:
            x = table[x][g]
            k += 1
        return k

    orders = tuple(sorted(order(g) for g in range(n)))
    abelian = all(table[i][j] == table[j][i]
                  for i in range(n) for j in range(i))
    if n in orders:
        return f"Z/{n}" if n > 1 else "1"
    if abelian:
        known = {
            (4, (1, 2, 2, 2)): "Z/2 x Z/2",
            (8, (1, 2, 2, 2, 2, 2, 2, 2)): "Z/2 x Z/2 x Z/2",
            (8, (1, 2, 2, 2, 4, 4, 4, 4)): "Z/2 x Z/4",
            (9, (1, 3, 3, 3, 3, 3, 3, 3, 3)): "Z/3 x Z/3",
            (12, (1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6)): "Z/2 x Z/6",
        }
        return known.get((n, orders))
    known = {
        (6, (1, 2, 2, 2, 3, 3)): "S3",
        (8, (1, 2, 2, 2, 2, 2, 4, 4)): "D4",
        (8, (1, 2, 4, 4, 4, 4, 4, 4)): "Q8",
        (10, (1, 2, 2, 2, 2, 2, 5, 5, 5, 5)): "D5",
        (12, (1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3)): "A4",
        (12, (1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6)): "D6",
        (12, (1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6)): "Dic3",
    }
    return known.get((n, orders))


def galois_check(a: AlgebraObj, h: Hypergroup, g: AutomorphismGroup) -> bool:
    """Galois = every minimal idempotent is an automorphism, and the
    hypergroup constants form an honest group table."""
    if g.size != h.size:
        return False
    try:
        constants, residual = hypergroup_constants(h)
    except SingularBasis:
        return False
    if residual > 1e-9:
        return False
    n = h.size
    for i in range(n):
        images = []
        for j in range(n):
            nz = [k for k in range(n) if not _is_zero(constants[i][j][k])]
            if len(nz) != 1 or not _is_one(constants[i][j][nz[0]]):
                return False
            images.append(nz[0])
        if sorted(images) != list(range(n)):
            return False
    return True


def _is_zero(v):
    return v.is_zero() if isinstance(v, Scalar) else abs(v) < 1e-9


def _is_one(v):
    return v == rat(1) if isinstance(v, Scalar) else abs(v - 1) < 1e-9


def hom_bounds(a: AlgebraObj, tol: float = 1e-9):
    """Per-simple bound dim C(X, A) <= d(X); violations are hard errors."""
    cat = a.cat
    out = []
    for s in range(cat.n_simples):
        mult = hom_dim(Obj(cat, [s]), a.obj)
        d = cat.qdim[s].embed().real
        if mult > d + tol:
            raise BoundViolation(
                f"dim C({cat.simples[s]}, A) = {mult} exceeds d = {d}")
        out.append({"simple": cat.simples[s], "hom_dim": mult, "qdim": d})
    return out


def is_maximally_symmetric(a: AlgebraObj) -> bool:
    """Exact equality dim C(A, A) = d(A)."""
    return rat(hom_dim(a.obj, a.obj)) == a.dim


def support_and_lemma_al(a: AlgebraObj):
    """Support simples of a maximally symmetric algebra and fiber dims.

    Asserts dim C(X, A) = d(X) on the support; returns (support names,
    fiber dimension map X -> dim C(X*, A)).
    """
    cat = a.cat
    support = []
    fiber = {}
    for s in range(cat.n_simples):
        mult = hom_dim(Obj(cat, [s]), a.obj)
        if mult == 0:
            continue
        if rat(mult) != cat.qdim[s]:
            raise LemmaAlViolation(
                f"dim C({cat.simples[s]}, A) = {mult} != d = {cat.qdim[s]}")
        support.append(s)
    for s in support:
        fiber[cat.simples[s]] = hom_dim(Obj(cat, [cat.dual[s]]), a.obj)
    return [cat.simples[s] for s in support], fiber


def tannakian_consequences(a: AlgebraObj, g: AutomorphismGroup,
                           h: Hypergroup) -> dict:
    """The six checkable consequences of maximal symmetry."""
    cat = a.cat
    support_names, fiber = support_and_lemma_al(a)
    support = [cat.index[s] for s in support_names]
    checks = {}

    closed = all(cat.dual[s] in support for s in support)
    for x in support:
        for y in support:
            for c, _m in cat.channels(x, y):
                if c not in support:
                    closed = False
    checks["support_closed"] = closed

    mult_ok = True
    for x in support:
        for y in support:
            lhs = fiber[cat.simples[x]] * fiber[cat.simples[y]]
            rhs = sum(m * fiber[cat.simples[c]] for c, m in cat.channels(x, y)
                      if c in support)
            if lhs != rhs:
                mult_ok = False
    checks["fiber_multiplicative"] = mult_ok

    symm = True
    for x in support:
        for y in support:
            ox, oy = Obj(cat, [x]), Obj(cat, [y])
            double = braiding_mor(oy, ox) @ braiding_mor(ox, oy)
            if double != Mor.identity(tensor_obj(ox, oy)):
                symm = False
    checks["support_symmetric"] = symm

    checks["group_order_is_dim"] = (rat(g.size) == a.dim)
    checks["fiber_squares_sum"] = (sum(v * v for v in fiber.values()) == g.size)
    checks["galois_group_table"] = galois_check(a, h, g)
    checks["all"] = all(checks.values())
    return checks


def symmetry_report(a: AlgebraObj, seed: int = 1234) -> dict:
    """Full symmetry analysis of an etale algebra as a report document."""
    from .algebras import is_etale
    report = {"algebra": a.name, "etale": is_etale(a)["etale"]}
    report["hom_bounds"] = hom_bounds(a)
    report["maximally_symmetric"] = is_maximally_symmetric(a)
    Q = ConvolutionAlgebra(a)
    from .convolution import minimal_idempotents
    h = minimal_idempotents(Q, seed=seed)
    g = automorphism_group(a, h)
    report["hypergroup_size"] = h.size
    report["hypergroup_exact"] = h.all_exact
    report["residuals"] = h.residuals
    report["aut_order"] = g.size
    report["aut_table"] = g.table
    report["group"] = g.name
    report["galois"] = galois_check(a, h, g)
    if report["maximally_symmetric"]:
        support, fiber = support_and_lemma_al(a)
        report["support"] = support
        report["fiber_dims"] = fiber
        report["tannakian"] = tannakian_consequences(a, g, h)
    return report
