"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A value is stored as an integer numerator vector over the powers
``zeta_M^0 .. zeta_M^(M-1)`` plus one positive common denominator.  The
vector is always reduced modulo the M-th cyclotomic polynomial, so two
values of the same conductor are equal iff their stored data coincide.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class IncompatibleConductor(ValueError):
    pass


# ----------------------------------------------------------------------
# small number theory helpers


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Obtained by exact division of x^n - 1 by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _divide_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _divide_monic(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _reduce(vec: list[int], M: int) -> list[int]:
    """Reduce an integer vector of length M modulo Phi_M, in place."""
    phi = cyclotomic_polynomial(M)
    deg = len(phi) - 1
    for i in range(M - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    vec[base + j] -= c * phi[j]
            vec[i] = 0
    return vec


# ----------------------------------------------------------------------


class CyclotomicNumber:
    """Element of Q(zeta_M) in canonical reduced form.

    Build values with :func:`root_of_unity`, :meth:`from_rational` or the
    constructor, which accepts any sequence of rationals (indices are taken
    modulo the conductor).
    """

    __slots__ = ("_M", "_num", "_den")

    def __init__(self, conductor: int, coefficients: Iterable[Scalar] = ()):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        coeffs = [Fraction(c) for c in coefficients]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        vec = [0] * conductor
        for j, c in enumerate(coeffs):
            vec[j % conductor] += c.numerator * (den // c.denominator)
        self._set(conductor, vec, den)

    @classmethod
    def _raw(cls, M: int, vec: list[int], den: int) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj._set(M, vec, den)
        return obj

    def _set(self, M: int, vec: list[int], den: int) -> None:
        _reduce(vec, M)
        g = den
        for c in vec:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if not any(vec):
            g = den
        if g > 1:
            vec = [c // g for c in vec]
            den //= g
        self._M = M
        self._num = tuple(vec)
        self._den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rational(cls, value: Scalar, conductor: int = 1) -> "CyclotomicNumber":
        value = Fraction(value)
        vec = [0] * conductor
        vec[0] = value.numerator
        return cls._raw(conductor, vec, value.denominator)

    @classmethod
    def from_exponent_counts(
        cls, conductor: int, counts: Sequence[int], sign: int = 1
    ) -> "CyclotomicNumber":
        """Return sum_e counts[e] * zeta^(sign*e) for integer counts."""
        vec = [0] * conductor
        for e, n in enumerate(counts):
            if n:
                vec[(sign * e) % conductor] += int(n)
        return cls._raw(conductor, vec, 1)

    # -- basic accessors ------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._M

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    # -- conductor handling ---------------------------------------------

    def lift(self, conductor: int) -> "CyclotomicNumber":
        if conductor % self._M:
            raise IncompatibleConductor(
                f"conductor {self._M} does not divide {conductor}"
            )
        if conductor == self._M:
            return self
        step = conductor // self._M
        vec = [0] * conductor
        for j, c in enumerate(self._num):
            if c:
                vec[j * step] = c
        return CyclotomicNumber._raw(conductor, vec, self._den)

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, _RationalABC)):
            return CyclotomicNumber.from_rational(Fraction(other), self._M)
        return None

    @staticmethod
    def _common(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        if a._M == b._M:
            return a, b
        M = _lcm(a._M, b._M)
        return a.lift(M), b.lift(M)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        den = _lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        vec = [x * fa + y * fb for x, y in zip(a._num, b._num)]
        return CyclotomicNumber._raw(a._M, vec, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._M, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(self, other)
        M = a._M
        vec = [0] * M
        bnz = [(j, y) for j, y in enumerate(b._num) if y]
        for i, x in enumerate(a._num):
            if x:
                for j, y in bnz:
                    vec[(i + j) % M] += x * y
        return CyclotomicNumber._raw(M, vec, a._den * b._den)

    __rmul__ = __mul__

    def scale(self, r: Scalar) -> "CyclotomicNumber":
        r = Fraction(r)
        return CyclotomicNumber._raw(
            self._M, [c * r.numerator for c in self._num], self._den * r.denominator
        )

    def conjugate(self) -> "CyclotomicNumber":
        M = self._M
        vec = [0] * M
        for j, c in enumerate(self._num):
            if c:
                vec[(-j) % M] = c
        return CyclotomicNumber._raw(M, vec, self._den)

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        nz = [(j, c) for j, c in enumerate(self._num) if c]
        if len(nz) == 1:
            j, c = nz[0]
            vec = [0] * self._M
            vec[(-j) % self._M] = self._den
            return CyclotomicNumber._raw(self._M, vec, 1).scale(Fraction(1, c))
        inv = _poly_inverse_mod(
            [Fraction(c, self._den) for c in self._num], cyclotomic_polynomial(self._M)
        )
        return CyclotomicNumber(self._M, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, bool):
            return self.scale(1 / Fraction(other))
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = CyclotomicNumber.from_rational(1, self._M)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of conductor."""
        M = self._M
        total = Fraction(0)
        for j, c in enumerate(self._num):
            if c:
                n = M // math.gcd(j, M)
                mu = mobius(n)
                if mu:
                    total += Fraction(c * mu, euler_phi(n))
        return total / self._den

    # -- embedding and display ------------------------------------------

    def embed(self) -> complex:
        M = self._M
        z = 0j
        for j, c in enumerate(self._num):
            if c:
                z += c * cmath.exp(2j * math.pi * j / M)
        return z / self._den

    __complex__ = embed

    def __repr__(self):
        return f"CyclotomicNumber({self._M}, {[str(c) for c in self.coefficients]})"

    def __str__(self):
        return pretty(self)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim([Fraction(x) for x in out])


def _poly_inverse_mod(a: list[Fraction], modulus: Sequence[int]) -> list[Fraction]:
    # extended Euclid: track s with s*a = r (mod modulus)
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


# ----------------------------------------------------------------------
# module level operations


def root_of_unity(M: int, e: int = 1) -> CyclotomicNumber:
    """zeta_M^e in canonical form."""
    if M < 1:
        raise ValueError("order must be >= 1")
    vec = [0] * M
    vec[e % M] = 1
    return CyclotomicNumber._raw(M, vec, 1)


def lift_conductor(a: CyclotomicNumber, conductor: int) -> CyclotomicNumber:
    return a.lift(conductor)


def unify(*values: CyclotomicNumber) -> list[CyclotomicNumber]:
    M = 1
    for v in values:
        M = _lcm(M, v.conductor)
    return [v.lift(M) for v in values]


def quadratic_gauss_sum(n: int) -> CyclotomicNumber:
    """sum_{j=0}^{n-1} zeta_n^(j^2)."""
    counts = [0] * n
    for j in range(n):
        counts[j * j % n] += 1
    return CyclotomicNumber.from_exponent_counts(n, counts)


@lru_cache(maxsize=None)
def sqrt_positive_integer(m: int) -> CyclotomicNumber:
    """The positive square root of m inside a cyclotomic field.

    Uses Gauss's evaluation of sum_j zeta_n^(j^2): sqrt(n), i*sqrt(n), 0 or
    (1+i)*sqrt(n) according to n mod 4.  The result has conductor dividing 4m.
    """
    if m < 1:
        raise ValueError("sqrt_positive_integer needs m >= 1")
    if m == 1:
        return CyclotomicNumber.from_rational(1)
    r = m % 4
    if r == 1:
        return quadratic_gauss_sum(m)
    if r == 3:
        return quadratic_gauss_sum(m) * root_of_unity(4, -1)
    one_minus_i = CyclotomicNumber(4, [1, -1])
    if r == 0:
        return (quadratic_gauss_sum(m) * one_minus_i).scale(Fraction(1, 2))
    # m = 2 mod 4: sqrt(m) = sqrt(4m) / 2
    return (quadratic_gauss_sum(4 * m) * one_minus_i).scale(Fraction(1, 4))


def embed_complex(a: CyclotomicNumber) -> complex:
    return a.embed()


# ----------------------------------------------------------------------
# human readable form


def _as_root_of_unity(u: CyclotomicNumber) -> tuple[int, int] | None:
    """Return (N, j) with u == zeta_N^j in lowest terms, if u is one."""
    z = u.embed()
    if abs(abs(z) - 1) > 1e-9:
        return None
    N = 2 * u.conductor if u.conductor % 2 else u.conductor
    j = round(cmath.phase(z) * N / (2 * math.pi)) % N
    if u != root_of_unity(N, j):
        return None
    g = math.gcd(j, N)
    return N // g, j // g


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = outer^2 * inner with inner squarefree."""
    outer, inner = 1, 1
    for p, e in _factorize(n).items():
        outer *= p ** (e // 2)
        inner *= p ** (e % 2)
    return outer, inner


def polar_form(a: CyclotomicNumber) -> tuple[Fraction, int, int, int] | None:
    """Write a as r * sqrt(s) * zeta_N^j with r > 0 rational, s squarefree.

    Returns (r, s, N, j) or None when a is not of that shape.
    """
    if a.is_zero():
        return None
    norm = a * a.conjugate()
    if not norm.is_rational():
        return None
    n2 = norm.to_rational()
    # |a| = sqrt(num/den) = sqrt(num*den)/den
    outer, inner = _squarefree_split(n2.numerator * n2.denominator)
    r = Fraction(outer, n2.denominator)
    modulus = sqrt_positive_integer(inner).scale(r)
    u = a / modulus
    rou = _as_root_of_unity(u)
    if rou is None:
        return None
    return (r, inner, rou[0], rou[1])


def pretty(a: CyclotomicNumber) -> str:
    if a.is_zero():
        return "0"
    if a.is_rational():
        return str(a.to_rational())
    pf = polar_form(a)
    if pf is None:
        return _coefficient_form(a)
    r, s, N, j = pf
    sign = ""
    unit = ""
    if N == 2:
        sign = "-"
    elif N == 4:
        sign, unit = ("", "i") if j == 1 else ("-", "i")
    elif N != 1:
        unit = f"zeta{N}^{j}"
    parts = []
    if r != 1 or (s == 1 and not unit):
        parts.append(str(r))
    if s != 1:
        parts.append(f"sqrt({s})")
    if unit:
        parts.append(unit)
    return sign + "*".join(parts)


def _coefficient_form(a: CyclotomicNumber) -> str:
    terms = []
    for j, c in enumerate(a.coefficients):
        if c:
            terms.append(str(c) if j == 0 else f"({c})*zeta{a.conductor}^{j}")
    return " + ".join(terms)
