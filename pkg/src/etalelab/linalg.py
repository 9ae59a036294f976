"""Exact linear algebra over cyclotomic Scalars.

Matrices are stored dense as lists of rows; everything is immutable by
convention (functions return fresh matrices).  Gaussian elimination is
fraction-free only in the sense of exact Fractions; no pivoting heuristics
are needed at desk scale.
"""

from __future__ import annotations

from .errors import Infeasible, ShapeMismatch
from .scalars import ONE, ZERO, Scalar


class ScalarMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: list[list[Scalar]], rows: int | None = None,
                 cols: int | None = None) -> None:
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatch("ragged matrix data")
        self.rows = rows
        self.cols = cols
        self.data = [list(r) for r in data]

    @staticmethod
    def zeros(rows: int, cols: int) -> "ScalarMatrix":
        return ScalarMatrix([[ZERO for _ in range(cols)] for _ in range(rows)],
                            rows, cols)

    @staticmethod
    def identity(n: int) -> "ScalarMatrix":
        m = ScalarMatrix.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    def copy(self) -> "ScalarMatrix":
        return ScalarMatrix(self.data, self.rows, self.cols)

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for ra, rb in zip(self.data, other.data)
                        for a, b in zip(ra, rb)))

    def __add__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return ScalarMatrix([[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return self + other.scale(Scalar.rational(-1))

    def scale(self, s: Scalar) -> "ScalarMatrix":
        return ScalarMatrix([[s * a for a in r] for r in self.data])

    def __matmul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"matmul shapes {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = ScalarMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.data[i][k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other.data[k][j]
                    if not b.is_zero():
                        out.data[i][j] = out.data[i][j] + a * b
        return out

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix([[self.data[i][j] for i in range(self.rows)]
                             for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.data for a in r)

    def embed(self):
        """Complex numpy array under the cyclotomic embedding."""
        import numpy as np
        return np.array([[a.embed() for a in r] for r in self.data],
                        dtype=complex)

    def __repr__(self):
        body = "; ".join(", ".join(repr(a) for a in r) for r in self.data)
        return f"ScalarMatrix[{body}]"


def rref(m: ScalarMatrix) -> tuple[ScalarMatrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    a = m.copy()
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        pivot = next((i for i in range(r, a.rows) if not a.data[i][c].is_zero()),
                     None)
        if pivot is None:
            continue
        a.data[r], a.data[pivot] = a.data[pivot], a.data[r]
        inv = a.data[r][c].inverse()
        a.data[r] = [inv * x for x in a.data[r]]
        for i in range(a.rows):
            if i != r and not a.data[i][c].is_zero():
                f = a.data[i][c]
                a.data[i] = [x - f * y for x, y in zip(a.data[i], a.data[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return a, pivots


def rank(m: ScalarMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: ScalarMatrix) -> list[list[Scalar]]:
    """Exact basis of ker(m), one vector per free column."""
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r.data[i][f]
        basis.append(v)
    return basis


def solve(m: ScalarMatrix, b: list[Scalar]) -> tuple[list[Scalar], list[list[Scalar]]]:
    """Solve m @ v = b exactly.

    Returns (particular solution, nullspace basis); raises Infeasible when
    the system has no solution.
    """
    if len(b) != m.rows:
        raise ShapeMismatch("rhs length mismatch")
    aug = ScalarMatrix([row + [bv] for row, bv in zip(m.data, b)],
                       m.rows, m.cols + 1)
    r, pivots = rref(aug)
    if m.cols in pivots:
        raise Infeasible("inconsistent linear system")
    v = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        v[p] = r.data[i][m.cols]
    return v, nullspace(m)


def invert(m: ScalarMatrix) -> ScalarMatrix:
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of non-square matrix")
    aug = ScalarMatrix([row + ident for row, ident in
                        zip(m.data, ScalarMatrix.identity(m.rows).data)],
                       m.rows, 2 * m.rows)
    r, pivots = rref(aug)
    if pivots != list(range(m.rows)):
        raise Infeasible("singular matrix")
    return ScalarMatrix([row[m.rows:] for row in r.data])


def solve_integer_congruence(a: list[list[int]], b: list[int], mod: int) -> list[int] | None:
    """Solve a @ x = b (mod `mod`) over the integers, or return None.

    Equivalent to solving [a | mod*I] @ (x, y) = b over Z.  Column
    elimination brings the extended matrix to lower-triangular form; small
    systems only (used for 2-cochain trivialisation in pointed categories).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    n = cols + rows
    full = [[a[i][j] for j in range(cols)]
            + [mod if k == i else 0 for k in range(rows)] for i in range(rows)]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colop_sub(c_from: int, c_to: int, q: int) -> None:
        for i in range(rows):
            full[i][c_to] -= q * full[i][c_from]
        for i in range(n):
            u[i][c_to] -= q * u[i][c_from]

    def colswap(c1: int, c2: int) -> None:
        for i in range(rows):
            full[i][c1], full[i][c2] = full[i][c2], full[i][c1]
        for i in range(n):
            u[i][c1], u[i][c2] = u[i][c2], u[i][c1]

    piv = 0
    pivot_of_row: list[int | None] = []
    for r in range(rows):
        while True:
            cands = [c for c in range(piv, n) if full[r][c] != 0]
            if len(cands) <= 1:
                break
            c1, c2 = sorted(cands[:2], key=lambda c: abs(full[r][c]))
            colop_sub(c1, c2, full[r][c2] // full[r][c1])
        cands = [c for c in range(piv, n) if full[r][c] != 0]
        if not cands:
            pivot_of_row.append(None)
            continue
        if cands[0] != piv:
            colswap(cands[0], piv)
        pivot_of_row.append(piv)
        piv += 1

    z = [0] * n
    for r in range(rows):
        acc = b[r] - sum(full[r][c] * z[c] for c in range(piv))
        p = pivot_of_row[r]
        if p is None:
            if acc != 0:
                return None
            continue
        if acc % full[r][p] != 0:
            return None
        z[p] = acc // full[r][p]
    xy = [sum(u[i][j] * z[j] for j in range(n)) for i in range(n)]
    return [v % mod for v in xy[:cols]]
