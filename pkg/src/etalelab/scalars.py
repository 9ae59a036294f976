"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as polynomials in zeta_N with Fraction coefficients,
reduced modulo the N-th cyclotomic polynomial, so equality of elements is
equality of coefficient tuples (within one conductor).  Mixed-conductor
arithmetic promotes both operands to the lcm conductor.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, ascending order, computed by exact division
    of x^N - 1 by the Phi_d for proper divisors d."""
    if N < 1:
        raise ValueError("conductor must be >= 1")
    # x^N - 1
    num = [Fraction(0)] * (N + 1)
    num[0] = Fraction(-1)
    num[N] = Fraction(1)
    for d in range(1, N):
        if N % d == 0:
            num = _poly_div_exact(num, [Fraction(c) for c in cyclotomic_poly(d)])
    return tuple(int(c) for c in num)


def _poly_div_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] / den[-1]
        out[i] = q
        for j, dc in enumerate(den):
            num[i + j] -= q * dc
    assert all(c == 0 for c in num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def phi_degree(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


def _reduce(coeffs: list[Fraction], N: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_N (exponents already arbitrary) modulo
    Phi_N, returning a fixed-length coefficient tuple."""
    deg = phi_degree(N)
    # fold exponents mod N first: zeta_N^N = 1
    folded = [Fraction(0)] * max(N, deg)
    for e, c in enumerate(coeffs):
        folded[e % N] += c
    phi = [Fraction(c) for c in cyclotomic_poly(N)]
    # long division remainder
    for i in range(len(folded) - 1, deg - 1, -1):
        q = folded[i]
        if q:
            for j in range(len(phi)):
                folded[i - deg + j] -= q * phi[j]
    return tuple(folded[:deg])


class Scalar:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs) -> None:
        self.N = N
        c = list(coeffs)
        if len(c) != phi_degree(N) or any(not isinstance(x, Fraction) for x in c):
            c = _reduce([Fraction(x) for x in c], N)
        self.c = tuple(c)

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(x) -> "Scalar":
        return Scalar(1, [Fraction(x)])

    @staticmethod
    def zero() -> "Scalar":
        return Scalar(1, [Fraction(0)])

    @staticmethod
    def one() -> "Scalar":
        return Scalar(1, [Fraction(1)])

    # -- conductor handling -------------------------------------------

    def promote(self, M: int) -> "Scalar":
        if M == self.N:
            return self
        if M % self.N != 0:
            raise ValueError(f"cannot promote conductor {self.N} to {M}")
        k = M // self.N
        coeffs = [Fraction(0)] * (phi_degree(self.N) * k + 1)
        for e, v in enumerate(self.c):
            coeffs[e * k] += v
        return Scalar(M, _reduce(coeffs, M))

    @staticmethod
    def _common(a: "Scalar", b: "Scalar") -> tuple["Scalar", "Scalar"]:
        if a.N == b.N:
            return a, b
        M = a.N * b.N // gcd(a.N, b.N)
        return a.promote(M), b.promote(M)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar.rational(x)
        return NotImplemented

    def __add__(self, other) -> "Scalar":
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Scalar._common(self, other)
        return Scalar(a.N, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.N, tuple(-x for x in self.c))

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Scalar._common(self, other)
        out = [Fraction(0)] * (2 * phi_degree(a.N))
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        out[i + j] += x * y
        return Scalar(a.N, _reduce(out, a.N))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        # extended Euclid against Phi_N in Q[x]
        phi = [Fraction(c) for c in cyclotomic_poly(self.N)]
        r0, r1 = phi, list(self.c)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1:
                inv = [s / r1[0] for s in s1]
                return Scalar(self.N, _reduce(inv, self.N))
            q, r = _poly_divmod(r0, r1)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def embed(self) -> complex:
        """Ring-homomorphic evaluation at zeta_N -> exp(2*pi*i/N)."""
        z = cmath.exp(2j * cmath.pi / self.N)
        out = 0j
        for x in reversed(self.c):
            out = out * z + complex(x)
        return out

    def conjugate(self) -> "Scalar":
        """Complex conjugation: zeta_N -> zeta_N^(N-1)."""
        coeffs = [Fraction(0)] * self.N
        for e, v in enumerate(self.c):
            coeffs[(-e) % self.N] += v
        return Scalar(self.N, _reduce(coeffs, self.N))

    def __eq__(self, other) -> bool:
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Scalar._common(self, other)
        return a.c == b.c

    def __hash__(self):
        # hash via promotion-stable signature: minimal nonzero support at
        # own conductor is not canonical across conductors, so hash the
        # embedding rounded coarsely plus rationality flag.
        if self.is_rational():
            return hash(self.c[0])
        v = self.embed()
        return hash((round(v.real, 6), round(v.imag, 6)))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.c[0])
        terms = []
        for e, v in enumerate(self.c):
            if v == 0:
                continue
            if e == 0:
                terms.append(str(v))
            else:
                coef = "" if v == 1 else ("-" if v == -1 else f"{v}*")
                terms.append(f"{coef}z{self.N}^{e}" if e > 1 else f"{coef}z{self.N}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- JSON encoding ---------------------------------------------------

    def to_json(self):
        if self.is_rational():
            f = self.c[0]
            if f.denominator == 1:
                return int(f)
            return f"{f.numerator}/{f.denominator}"
        terms = [
            [v.numerator, v.denominator, e] for e, v in enumerate(self.c) if v != 0
        ]
        return {"N": self.N, "terms": terms}

    @staticmethod
    def from_json(doc) -> "Scalar":
        if isinstance(doc, bool):
            raise ValueError("boolean is not a Scalar")
        if isinstance(doc, int):
            return Scalar.rational(doc)
        if isinstance(doc, str):
            return Scalar.rational(Fraction(doc))
        if isinstance(doc, dict):
            N = doc["N"]
            coeffs = [Fraction(0)] * N
            for term in doc["terms"]:
                if len(term) == 3:
                    num, den, e = term
                else:
                    num, e = term
                    den = 1
                coeffs[e % N] += Fraction(num, den)
            return Scalar(N, _reduce(coeffs, N))
        raise ValueError(f"cannot parse Scalar from {doc!r}")


def zeta(N: int, e: int = 1) -> Scalar:
    """zeta_N^e in canonical reduced form."""
    if N < 1:
        raise ValueError("conductor must be >= 1")
    coeffs = [Fraction(0)] * N
    coeffs[e % N] = Fraction(1)
    return Scalar(N, _reduce(coeffs, N))


def rat(x) -> Scalar:
    return Scalar.rational(x)


ZERO = Scalar.zero()
ONE = Scalar.one()


# -- polynomial helpers over Fraction ------------------------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    b = _poly_trim(list(b))
    r = list(a)
    if len(r) < len(b):
        return [Fraction(0)], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        f = r[i + len(b) - 1] / b[-1]
        q[i] = f
        if f:
            for j, bc in enumerate(b):
                r[i + j] -= f * bc
    return q, _poly_trim(r[: len(b) - 1])


def from_complex(z: complex, N: int, max_den: int = 64,
                 tol: float = 1e-8) -> "Scalar | None":
    """Recognize a complex number as a short cyclotomic in Q(zeta_N).

    Tries sums of at most two monomials (p/q) zeta_N^e with denominators
    up to max_den, verifying the embedding to within tol.  Returns None
    when no candidate fits; callers must still verify any algebraic
    identities exactly.
    """
    def check(cand: "Scalar") -> "Scalar | None":
        return cand if abs(cand.embed() - z) <= tol else None

    if abs(z) <= tol:
        return Scalar.zero()
    roots = [cmath.exp(2j * cmath.pi * e / N) for e in range(N)]
    for e, w in enumerate(roots):
        a = z / w
        if abs(a.imag) > tol:
            continue
        fr = Fraction(a.real).limit_denominator(max_den)
        if abs(fr - a.real) <= tol:
            out = check(rat(fr) * zeta(N, e))
            if out is not None:
                return out
    for e1 in range(N):
        w1 = roots[e1]
        for e2 in range(e1 + 1, N):
            w2 = roots[e2]
            det = w1.real * w2.imag - w1.imag * w2.real
            if abs(det) < 1e-9:
                continue
            a = (z.real * w2.imag - z.imag * w2.real) / det
            b = (w1.real * z.imag - w1.imag * z.real) / det
            fa = Fraction(a).limit_denominator(max_den)
            fb = Fraction(b).limit_denominator(max_den)
            if abs(fa - a) <= tol and abs(fb - b) <= tol:
                out = check(rat(fa) * zeta(N, e1) + rat(fb) * zeta(N, e2))
                if out is not None:
                    return out
    return None
