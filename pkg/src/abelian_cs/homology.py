"""Integer linear algebra for surgery presentations.

H_1 of the surgered manifold is the cokernel of the surgery linking matrix;
a link is homologically trivial when its total class lies in the image.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .links import AmbientLinkPresentation, Matrix, as_matrix, check_symmetric


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion coefficients {t} do not form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return None if self.free_rank else math.prod(self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ B @ V == D, with U, V unimodular and D diagonal with d_1 | d_2 | ..."""

    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


def _eye(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return ()
    inner = len(b)
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(inner)) for j in range(cols))
        for i in range(len(a))
    )


def smith_normal_form(B: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form over the integers with transforms and their inverses.

    Pivots on the smallest nonzero absolute value; all arithmetic is exact.
    """
    D = [list(r) for r in as_matrix(B)]
    m = len(D)
    n = len(D[0]) if m else 0
    U, Ui, V, Vi = _eye(m), _eye(m), _eye(n), _eye(n)

    def row_add(dst, src, c):
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]
        for r in Ui:
            r[src] -= c * r[dst]

    def row_swap(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]
        for r in Ui:
            r[a], r[b] = r[b], r[a]

    def row_neg(a):
        D[a] = [-x for x in D[a]]
        U[a] = [-x for x in U[a]]
        for r in Ui:
            r[a] = -r[a]

    def col_add(dst, src, c):
        for r in D:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]
        Vi[src] = [x - c * y for x, y in zip(Vi[src], Vi[dst])]

    def col_swap(a, b):
        for r in D:
            r[a], r[b] = r[b], r[a]
        for r in V:
            r[a], r[b] = r[b], r[a]
        Vi[a], Vi[b] = Vi[b], Vi[a]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = D[i][j]
                    if x and (best is None or abs(x) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                row_swap(t, best[0])
            if best[1] != t:
                col_swap(t, best[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    row_add(i, t, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    col_add(j, t, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            row_neg(t)

    freeze = lambda M: tuple(tuple(r) for r in M)
    return SmithDecomposition(freeze(U), freeze(D), freeze(V), freeze(Ui), freeze(Vi))


def determinant(B: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in B]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def first_homology(B: Sequence[Sequence[int]]) -> HomologyGroup:
    B = as_matrix(B, "surgery_matrix")
    check_symmetric(B, "surgery_matrix")
    diag = smith_normal_form(B).diagonal if B else ()
    return HomologyGroup(
        free_rank=sum(1 for d in diag if d == 0),
        torsion=tuple(d for d in diag if d > 1),
    )


def is_homology_sphere(B: Sequence[Sequence[int]]) -> bool:
    trivial = first_homology(B).is_trivial()
    unimodular = abs(determinant(B)) == 1
    if trivial != unimodular:
        raise ArithmeticError("Smith form and determinant disagree")
    return trivial


def link_homology_class(p: AmbientLinkPresentation) -> tuple[int, ...]:
    """Class of the link in H_1(S^3 - surgery link), on the meridian generators."""
    return p.cross_charge()


def solve_integer_system(
    B: Sequence[Sequence[int]], t: Sequence[int], modulus: int | None = None
) -> tuple[int, ...] | None:
    """Find integer n with B n = t (or B n = t mod modulus); None if impossible."""
    B = as_matrix(B)
    m = len(B)
    if m == 0:
        return ()
    snf = smith_normal_form(B)
    n_cols = len(B[0])
    s = [sum(snf.U[i][j] * t[j] for j in range(m)) for i in range(m)]
    y = [0] * n_cols
    for i in range(m):
        d = snf.D[i][i] if i < n_cols else 0
        if modulus is None:
            if d == 0:
                if s[i]:
                    return None
            elif s[i] % d:
                return None
            else:
                y[i] = s[i] // d
        else:
            g = math.gcd(d, modulus)
            if s[i] % g:
                return None
            if d % modulus:
                mg = modulus // g
                y[i] = (s[i] // g) * pow(d // g, -1, mg) % mg
    sol = [sum(snf.V[i][j] * y[j] for j in range(n_cols)) for i in range(n_cols)]
    if modulus is not None:
        half = modulus // 2
        sol = [((x + half - 1) % modulus) - half + 1 if modulus > 1 else 0 for x in sol]
    return tuple(sol)


def is_homologically_trivial(
    p: AmbientLinkPresentation, modulus: int | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether the link class lies in the image of the surgery matrix.

    With ``modulus`` (normally 2k) the question is asked modulo that integer
    and the witness entries are taken in (-modulus/2, modulus/2].
    """
    t = link_homology_class(p)
    n = solve_integer_system(p.surgery, t, modulus)
    return (n is not None, n)
