"""Framed, oriented, coloured links described by their linking data.

A link is never stored as a diagram: every abelian observable depends only
on the linking matrix and the colours, so those are the whole model.
Component indices are 0-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

Matrix = tuple[tuple[int, ...], ...]


class ValidationError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]], name: str = "matrix") -> Matrix:
    """Convert nested sequences to an immutable integer matrix, checking shape."""
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ValidationError(
                f"{name}: row {i + 1} has length {len(r)}, expected {width}"
            )
        for j, x in enumerate(r):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise ValidationError(
                    f"{name}: entry ({i + 1},{j + 1}) = {x!r} is not an integer"
                )
    return tuple(tuple(int(x) for x in r) for r in rows)


def check_symmetric(m: Matrix, name: str = "matrix") -> None:
    n = len(m)
    for r in m:
        if len(r) != n:
            raise ValidationError(f"{name}: not square ({n} rows, row of length {len(r)})")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValidationError(
                    f"{name}: not symmetric, entries ({i + 1},{j + 1}) = {m[i][j]} "
                    f"and ({j + 1},{i + 1}) = {m[j][i]} differ"
                )


def check_coupling(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k == 0:
        raise PreconditionError(f"coupling k must be a nonzero integer, got {k!r}")
    return int(k)


def block_diagonal(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    rows = [tuple(r) + (0,) * nb for r in a]
    rows += [(0,) * na + tuple(r) for r in b]
    return tuple(rows)


@dataclass(frozen=True)
class ColouredLinkingData:
    """Linking matrix (framings on the diagonal) plus one integer colour per component."""

    matrix: Matrix
    colours: tuple[int, ...]

    def __post_init__(self):
        m = as_matrix(self.matrix)
        check_symmetric(m)
        colours = tuple(int(q) for q in self.colours)
        if len(colours) != len(m):
            raise ValidationError(
                f"colours: length {len(colours)} does not match {len(m)} components"
            )
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "colours", colours)

    @classmethod
    def from_lists(cls, matrix, colours=None) -> "ColouredLinkingData":
        m = as_matrix(matrix)
        if colours is None:
            colours = (1,) * len(m)
        return cls(m, tuple(colours))

    @classmethod
    def empty(cls) -> "ColouredLinkingData":
        return cls((), ())

    @property
    def size(self) -> int:
        return len(self.colours)

    def quadratic_form(self) -> int:
        """sum_ij q_i L_ij q_j."""
        q = self.colours
        return sum(
            q[i] * self.matrix[i][j] * q[j]
            for i in range(self.size)
            for j in range(self.size)
        )

    def reverse_orientation(self, j: int) -> "ColouredLinkingData":
        n = self.size
        m = [list(r) for r in self.matrix]
        for a in range(n):
            if a != j:
                m[j][a] = -m[j][a]
                m[a][j] = -m[a][j]
        colours = list(self.colours)
        colours[j] = -colours[j]
        return ColouredLinkingData(as_matrix(m), tuple(colours))


def simplicial_satellite(link: ColouredLinkingData) -> ColouredLinkingData:
    """Replace each component of colour q by |q| parallel copies of colour 1.

    Negative colours are first made positive by reversing the component.
    Copies of one component are emitted contiguously, in the original order.
    """
    for j, q in enumerate(link.colours):
        if q < 0:
            link = link.reverse_orientation(j)
    owner = [j for j, q in enumerate(link.colours) for _ in range(q)]
    m = tuple(tuple(link.matrix[a][b] for b in owner) for a in owner)
    return ColouredLinkingData(m, (1,) * len(owner))


def sum_components(link: ColouredLinkingData, i: int, j: int) -> ColouredLinkingData:
    """Band-sum components i and j (same colour) into one component.

    The merged component takes the position of min(i, j).
    """
    n = link.size
    if not (0 <= i < n and 0 <= j < n):
        raise PreconditionError(f"component indices ({i}, {j}) out of range for {n} components")
    if i == j:
        raise PreconditionError("cannot sum a component with itself")
    if link.colours[i] != link.colours[j]:
        raise PreconditionError(
            f"components {i} and {j} have different colours "
            f"{link.colours[i]} and {link.colours[j]}"
        )
    i, j = min(i, j), max(i, j)
    L = link.matrix
    keep = [a for a in range(n) if a != j]

    def entry(a: int, b: int) -> int:
        if a == i and b == i:
            return L[i][i] + L[j][j] + 2 * L[i][j]
        if a == i:
            return L[i][b] + L[j][b]
        if b == i:
            return L[a][i] + L[a][j]
        return L[a][b]

    m = tuple(tuple(entry(a, b) for b in keep) for a in keep)
    return ColouredLinkingData(m, tuple(link.colours[a] for a in keep))


def equivalent_knot(link: ColouredLinkingData) -> int:
    """Self-linking of the knot obtained by folding the satellite left to right."""
    sat = simplicial_satellite(link)
    if sat.size == 0:
        return 0
    while sat.size > 1:
        sat = sum_components(sat, 0, 1)
    return sat.matrix[0][0]


def disjoint_union(a: ColouredLinkingData, b: ColouredLinkingData) -> ColouredLinkingData:
    return ColouredLinkingData(block_diagonal(a.matrix, b.matrix), a.colours + b.colours)


def reduce_colours(link: ColouredLinkingData, k: int) -> ColouredLinkingData:
    k = check_coupling(k)
    period = 2 * abs(k)
    return ColouredLinkingData(link.matrix, tuple(q % period for q in link.colours))


@dataclass(frozen=True)
class AmbientLinkPresentation:
    """A coloured link L inside the manifold given by surgery on a framed link in S^3.

    ``surgery`` is the surgery linking matrix B (diagonal = surgery
    coefficients), ``link`` the coloured link block and ``cross[i][a]`` the
    linking number of surgery component i with link component a.
    """

    surgery: Matrix
    link: ColouredLinkingData = field(default_factory=ColouredLinkingData.empty)
    cross: Matrix | None = None

    def __post_init__(self):
        b = as_matrix(self.surgery, "surgery_matrix")
        check_symmetric(b, "surgery_matrix")
        n_s, n_l = len(b), self.link.size
        if self.cross is None:
            c = tuple((0,) * n_l for _ in range(n_s))
        else:
            c = as_matrix(self.cross, "cross_matrix")
            if len(c) != n_s or any(len(r) != n_l for r in c):
                raise ValidationError(
                    f"cross_matrix: expected shape {n_s}x{n_l}, got "
                    f"{len(c)}x{len(c[0]) if c else 0}"
                )
        object.__setattr__(self, "surgery", b)
        object.__setattr__(self, "cross", c)

    @classmethod
    def in_s3(cls, link: ColouredLinkingData) -> "AmbientLinkPresentation":
        return cls((), link, ())

    @property
    def n_surgery(self) -> int:
        return len(self.surgery)

    def assembled(self) -> Matrix:
        """The full symmetric matrix [[B, C], [C^T, L]]."""
        n_s, n_l = self.n_surgery, self.link.size
        rows = []
        for i in range(n_s):
            rows.append(self.surgery[i] + self.cross[i])
        for a in range(n_l):
            rows.append(tuple(self.cross[i][a] for i in range(n_s)) + self.link.matrix[a])
        return tuple(rows)

    def cross_charge(self) -> tuple[int, ...]:
        """t = C q: total charge linked with each surgery component."""
        q = self.link.colours
        return tuple(sum(c * x for c, x in zip(row, q)) for row in self.cross)

    def with_link(self, link: ColouredLinkingData, cross: Matrix) -> "AmbientLinkPresentation":
        return AmbientLinkPresentation(self.surgery, link, cross)


def reverse_link_component(p: AmbientLinkPresentation, j: int) -> AmbientLinkPresentation:
    """Reverse link component j, flipping its colour, linkings and cross-linkings."""
    cross = tuple(tuple(-x if a == j else x for a, x in enumerate(row)) for row in p.cross)
    return AmbientLinkPresentation(p.surgery, p.link.reverse_orientation(j), cross)


def satellite_presentation(p: AmbientLinkPresentation) -> AmbientLinkPresentation:
    """Simplicial satellite of the link block, with cross-linkings copied per strand."""
    for j, q in enumerate(p.link.colours):
        if q < 0:
            p = reverse_link_component(p, j)
    owner = [j for j, q in enumerate(p.link.colours) for _ in range(q)]
    link = simplicial_satellite(p.link)
    cross = tuple(tuple(row[a] for a in owner) for row in p.cross)
    return AmbientLinkPresentation(p.surgery, link, cross)


def add_unlinked_component(
    p: AmbientLinkPresentation, framing: int, colour: int
) -> AmbientLinkPresentation:
    link = disjoint_union(p.link, ColouredLinkingData(((framing,),), (colour,)))
    cross = tuple(row + (0,) for row in p.cross)
    return AmbientLinkPresentation(p.surgery, link, cross)
