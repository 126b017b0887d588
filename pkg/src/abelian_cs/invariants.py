"""U(1) Reshetikhin-Turaev invariants of surgery presentations.

I_k(M) = (2k)^(-N/2) exp(i pi sigma / 4) sum_c zeta_4k^(-c.B.c), and the
variant I_(p,k) where colours run over the order-p subgroup of Z_2k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import (
    CyclotomicNumber,
    quadratic_gauss_sum,
    root_of_unity,
    sqrt_positive_integer,
)
from .enumeration import colour_sum
from .homology import determinant
from .links import Matrix, PreconditionError, as_matrix, block_diagonal, check_symmetric


class InvariantUndefined(ArithmeticError):
    pass


@dataclass(frozen=True)
class SignatureTriple:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def sigma(self) -> int:
        return self.n_plus - self.n_minus


@dataclass(frozen=True)
class ManifoldInvariant:
    value: CyclotomicNumber
    k: int
    subgroup_p: int | None
    presentation_size: int
    signature: SignatureTriple | None = None

    def embed(self) -> complex:
        return self.value.embed()


def _symmetric(B) -> Matrix:
    B = as_matrix(B, "surgery_matrix")
    check_symmetric(B, "surgery_matrix")
    return B


def _check_k(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise PreconditionError(f"coupling k must be a positive integer, got {k!r}")
    return k


def congruence_diagonal(B: Sequence[Sequence[int]]) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalisation E^T B E."""
    A = [[Fraction(x) for x in r] for r in B]
    n = len(A)
    out = []
    for p in range(n):
        if A[p][p] == 0:
            j = next((j for j in range(p + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[p], A[j] = A[j], A[p]
                for r in A:
                    r[p], r[j] = r[j], r[p]
            else:
                j = next((j for j in range(p + 1, n) if A[p][j] != 0), None)
                if j is not None:
                    # row/col p += row/col j makes the pivot 2*A[p][j] != 0
                    A[p] = [x + y for x, y in zip(A[p], A[j])]
                    for r in A:
                        r[p] += r[j]
        piv = A[p][p]
        if piv != 0:
            for i in range(p + 1, n):
                f = A[i][p] / piv
                if f:
                    A[i] = [x - f * y for x, y in zip(A[i], A[p])]
                    for r in A:
                        r[i] -= f * r[p]
        out.append(piv)
    return out


def signature_by_minors(B: Sequence[Sequence[int]]) -> int | None:
    """Jacobi's rule: sign changes of leading principal minors.

    Returns None when some leading minor vanishes.
    """
    minors = [1] + [determinant([r[:m] for r in B[:m]]) for m in range(1, len(B) + 1)]
    if any(d == 0 for d in minors):
        return None
    neg = sum(1 for a, b in zip(minors, minors[1:]) if (a > 0) != (b > 0))
    return len(B) - 2 * neg


def signature(B: Sequence[Sequence[int]]) -> SignatureTriple:
    B = _symmetric(B)
    diag = congruence_diagonal(B)
    triple = SignatureTriple(
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )
    by_minors = signature_by_minors(B)
    if by_minors is not None and by_minors != triple.sigma:
        raise ArithmeticError(f"signature mismatch: {triple.sigma} vs minors {by_minors}")
    return triple


def _inverse_sqrt_power(m: int, n: int) -> CyclotomicNumber:
    """sqrt(m)^(-n) for n >= 0, exactly."""
    if n % 2 == 0:
        return CyclotomicNumber.from_rational(Fraction(1, m ** (n // 2)))
    return sqrt_positive_integer(m).scale(Fraction(1, m ** ((n + 1) // 2)))


def rt_invariant(B: Sequence[Sequence[int]], k: int, threads: int | None = None) -> ManifoldInvariant:
    B = _symmetric(B)
    k = _check_k(k)
    sig = signature(B)
    total = colour_sum(B, k, threads=threads)
    value = total * root_of_unity(8, sig.sigma) * _inverse_sqrt_power(2 * k, len(B))
    return ManifoldInvariant(value, k, None, len(B), sig)


def subgroup_gauss_factor(k: int, p: int) -> CyclotomicNumber:
    """G = sum_{b<p} exp(-i pi d b^2 / p), d = 2k/p."""
    d = 2 * k // p
    return colour_sum(((1,),), k, colour_values=[d * b for b in range(p)])


def subgroup_invariant(
    B: Sequence[Sequence[int]], k: int, p: int, threads: int | None = None
) -> ManifoldInvariant:
    """I_(p,k): colours restricted to multiples of d = 2k/p.

    Normalised by a^(-N) exp(i phi sigma) where G = a exp(-i phi), which is
    G^(-n_plus) conj(G)^(-n_minus) a^(-n_zero).
    """
    B = _symmetric(B)
    k = _check_k(k)
    if isinstance(p, bool) or not isinstance(p, int) or p < 1 or (2 * k) % p:
        raise PreconditionError(f"p = {p!r} does not divide 2k = {2 * k}")
    d = 2 * k // p
    G = subgroup_gauss_factor(k, p)
    if G.is_zero():
        raise InvariantUndefined(
            f"subgroup invariant undefined: the Gauss factor vanishes for p={p}, k={k}"
        )
    sig = signature(B)
    total = colour_sum(B, k, colour_values=[d * b for b in range(p)], threads=threads)
    value = total * G ** (-sig.n_plus) * G.conjugate() ** (-sig.n_minus)
    if sig.n_zero:
        a2 = G * G.conjugate()
        r = a2.to_rational()
        if r.denominator != 1 or r <= 0:
            raise ArithmeticError(f"|G|^2 = {r} is not a positive integer")
        value = value * _inverse_sqrt_power(int(r), sig.n_zero)
    return ManifoldInvariant(value, k, p, len(B), sig)


def lens_closed_form(p: int, k: int) -> ManifoldInvariant:
    """I_k(L_p) = p^(-1/2) sum_{n<p} exp(2 pi i k n^2 / p)."""
    k = _check_k(k)
    if p < 2:
        raise PreconditionError("lens_closed_form needs p >= 2")
    counts = [0] * p
    for n in range(p):
        counts[k * n * n % p] += 1
    gauss = CyclotomicNumber.from_exponent_counts(p, counts)
    value = gauss * sqrt_positive_integer(p).scale(Fraction(1, p))
    return ManifoldInvariant(value, k, None, 1)


def _exp_i_pi(numer: int, denom: int) -> CyclotomicNumber:
    """exp(i pi numer / denom) for nonzero integer denom."""
    if denom < 0:
        numer, denom = -numer, -denom
    return root_of_unity(2 * denom, numer)


def _exp_sum(order: int, exponents) -> CyclotomicNumber:
    counts = [0] * order
    for e in exponents:
        counts[e % order] += 1
    return CyclotomicNumber.from_exponent_counts(order, counts)


def reciprocity_sides(a: int, b: int, c: int) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """Both sides of the quadratic reciprocity formula for Gauss sums, exactly."""
    if a * c == 0 or (a * c + b) % 2:
        raise PreconditionError(f"need ac != 0 and ac + b even, got a={a}, b={b}, c={c}")
    sc = 1 if c > 0 else -1
    sa = 1 if a > 0 else -1
    # exp(-i pi x / c) = zeta_{2|c|}^(-x sign c)
    left = _exp_sum(2 * abs(c), (-sc * (a * n * n + b * n) for n in range(abs(c))))
    right_sum = _exp_sum(2 * abs(a), (sa * (c * n * n + b * n) for n in range(abs(a))))
    prefactor = sqrt_positive_integer(abs(a * c)).scale(Fraction(1, abs(a)))
    phase = _exp_i_pi(-(abs(a * c) - b * b), 4 * a * c)
    return left, prefactor * phase * right_sum


def reciprocity_check(a: int, b: int, c: int) -> bool:
    left, right = reciprocity_sides(a, b, c)
    exact = left == right
    numeric = abs(left.embed() - right.embed()) < 1e-9
    if exact != numeric:
        raise ArithmeticError("exact and numeric reciprocity evaluations disagree")
    return exact


# ----------------------------------------------------------------------
# manifold catalog


def negative_continued_fraction(p: int, r: int) -> list[int]:
    """Coefficients a_i >= 2 (a_1 may be 1 when p = r) with p/r = a_1 - 1/(a_2 - ...)."""
    out = []
    while r:
        a = -(-p // r)
        out.append(a)
        p, r = r, a * r - p
    return out


def lens_presentation(p: int, r: int = 1) -> Matrix:
    """Linear chain surgery presentation of the lens space L(p/r)."""
    if p < 1 or r < 1 or (r >= p and not (p == 1 and r == 1)):
        raise PreconditionError(f"need 0 < r < p (or p = r = 1), got p={p}, r={r}")
    if math.gcd(p, r) != 1:
        raise PreconditionError(f"p={p} and r={r} are not coprime")
    coeffs = negative_continued_fraction(p, r)
    n = len(coeffs)
    return tuple(
        tuple(coeffs[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def genus_times_circle(g: int) -> Matrix:
    """Zero linking matrix with 2g+1 components: Sigma_g x S^1."""
    if g < 0:
        raise PreconditionError("genus must be >= 0")
    n = 2 * g + 1
    return tuple((0,) * n for _ in range(n))


def connected_sum(B1: Sequence[Sequence[int]], B2: Sequence[Sequence[int]]) -> Matrix:
    return block_diagonal(_symmetric(B1), _symmetric(B2))


def catalog() -> dict[str, Matrix]:
    """Named surgery presentations used throughout the tests and demos."""
    out: dict[str, Matrix] = {
        "S3": (),
        "S2xS1": genus_times_circle(0),
        "T3": genus_times_circle(1),
        "poincare_like": ((1, 0, 0), (0, -1, 0), (0, 0, 1)),
        "trefoil_2": ((2,),),
    }
    for p, r in [(2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3), (8, 3), (9, 1), (9, 2)]:
        out[f"L({p},{r})"] = lens_presentation(p, r)
    out["L(9,1)#L(7,1)"] = connected_sum(lens_presentation(9, 1), lens_presentation(7, 1))
    out["L(9,2)#L(7,2)"] = connected_sum(lens_presentation(9, 2), lens_presentation(7, 2))
    out["L(5,2)#S2xS1"] = connected_sum(lens_presentation(5, 2), genus_times_circle(0))
    return out
