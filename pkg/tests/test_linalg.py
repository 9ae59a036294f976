import random
from fractions import Fraction

import pytest

from etalelab.errors import Infeasible
from etalelab.linalg import (ScalarMatrix, invert, nullspace, rank, solve,
                             solve_integer_congruence)
from etalelab.scalars import rat, zeta


def _mat(rows):
    return ScalarMatrix([[rat(x) if isinstance(x, (int, Fraction)) else x
                          for x in r] for r in rows])


def test_identity_solve():
    m = ScalarMatrix.identity(3)
    b = [rat(1), rat(5), rat(-2)]
    v, ns = solve(m, b)
    assert v == b
    assert ns == []


def test_zero_matrix_solve():
    m = ScalarMatrix.zeros(2, 3)
    v, ns = solve(m, [rat(0), rat(0)])
    assert v == [rat(0)] * 3
    assert len(ns) == 3


def test_infeasible():
    m = _mat([[1, 1], [1, 1]])
    with pytest.raises(Infeasible):
        solve(m, [rat(1), rat(2)])


def test_solve_over_q_zeta3_residual_zero():
    w = zeta(3)
    m = ScalarMatrix([[w, rat(1)], [rat(1), w]])
    b = [rat(2), w + rat(1)]
    v, ns = solve(m, b)
    assert ns == []
    for i in range(2):
        lhs = m.data[i][0] * v[0] + m.data[i][1] * v[1]
        assert lhs == b[i]


def test_random_solve_residuals():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = ScalarMatrix([[rat(rng.randint(-3, 3)) + rat(rng.randint(0, 1)) * zeta(4)
                           for _ in range(n)] for _ in range(n)])
        x = [rat(rng.randint(-3, 3)) for _ in range(n)]
        b = [sum((m.data[i][j] * x[j] for j in range(n)), rat(0))
             for i in range(n)]
        v, ns = solve(m, b)
        for i in range(n):
            lhs = sum((m.data[i][j] * v[j] for j in range(n)), rat(0))
            assert lhs == b[i]


def test_rank_and_nullspace():
    m = _mat([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    ns = nullspace(m)
    assert len(ns) == 2
    for v in ns:
        for row in m.data:
            assert sum((row[j] * v[j] for j in range(3)), rat(0)) == rat(0)


def test_invert():
    m = _mat([[1, 1], [0, 2]])
    mi = invert(m)
    assert (m @ mi) == ScalarMatrix.identity(2)


def test_matmul_shapes():
    a = _mat([[1, 0, 2]])
    b = _mat([[1], [1], [1]])
    assert (a @ b).data[0][0] == rat(3)


def test_integer_congruence_basic():
    # x0 + x1 = 3, x0 - x1 = 1 (mod 8)
    x = solve_integer_congruence([[1, 1], [1, -1]], [3, 1], 8)
    assert x is not None
    assert (x[0] + x[1]) % 8 == 3
    assert (x[0] - x[1]) % 8 == 1


def test_integer_congruence_even_mod():
    # 2x = 1 mod 4 has no solution
    assert solve_integer_congruence([[2]], [1], 4) is None
    # 2x = 2 mod 4 does
    x = solve_integer_congruence([[2]], [2], 4)
    assert x is not None and (2 * x[0]) % 4 == 2


def test_integer_congruence_random():
    rng = random.Random(5)
    for _ in range(30):
        rows, cols, mod = rng.randint(1, 4), rng.randint(1, 4), rng.choice([2, 4, 6, 8, 12])
        a = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        xtrue = [rng.randrange(mod) for _ in range(cols)]
        b = [sum(a[i][j] * xtrue[j] for j in range(cols)) % mod for i in range(rows)]
        x = solve_integer_congruence(a, b, mod)
        assert x is not None
        for i in range(rows):
            assert sum(a[i][j] * x[j] for j in range(cols)) % mod == b[i] % mod
