"""Wilson line expectation values in S^3 and in surgery presentations."""
from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicNumber, root_of_unity
from .enumeration import colour_sum
from .homology import is_homologically_trivial
from .links import (
    AmbientLinkPresentation,
    ColouredLinkingData,
    PreconditionError,
    add_unlinked_component,
    satellite_presentation,
)


class ObservableUndefined(ArithmeticError):
    """The surgery denominator vanishes, so the ratio has no value."""


class NotHomologicallyTrivial(ValueError):
    pass


@dataclass(frozen=True)
class ObservableValue:
    value: CyclotomicNumber | None
    defined: bool = True

    def embed(self) -> complex:
        if not self.defined:
            raise ObservableUndefined("observable is undefined")
        return self.value.embed()


def _check_k(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise PreconditionError(f"coupling k must be a positive integer, got {k!r}")
    return k


def observable_s3(link: ColouredLinkingData, k: int) -> ObservableValue:
    """exp{-(2 i pi / 4k) q.L.q}."""
    k = _check_k(k)
    return ObservableValue(root_of_unity(4 * k, -link.quadratic_form()))


def surgery_ratio(
    p: AmbientLinkPresentation, k: int, threads: int | None = None
) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """Numerator and denominator of the surgery rule, as exact values in Q(zeta_4k)."""
    k = _check_k(k)
    num = colour_sum(p.surgery, k, p.cross_charge(), p.link.quadratic_form(), threads=threads)
    den = colour_sum(p.surgery, k, threads=threads)
    return num, den


def observable_surgery(
    p: AmbientLinkPresentation, k: int, strict: bool = True, threads: int | None = None
) -> ObservableValue:
    """<W(L)>_M as the ratio <W(L) W(surgery link)>_S3 / <W(surgery link)>_S3.

    Each surgery component carries the colour sum over 0..2k-1.  A vanishing
    denominator raises :class:`ObservableUndefined`, or returns an undefined
    value when ``strict`` is false.
    """
    num, den = surgery_ratio(p, k, threads)
    if den.is_zero():
        if strict:
            raise ObservableUndefined(
                "observable undefined: the surgery denominator vanishes"
            )
        return ObservableValue(None, defined=False)
    return ObservableValue(num / den)


def _split_signs(B) -> list[int]:
    n = len(B)
    for i in range(n):
        for j in range(n):
            if i != j and B[i][j]:
                raise PreconditionError("surgery matrix is not algebraically split")
        if B[i][i] not in (1, -1):
            raise PreconditionError(
                f"surgery coefficient {B[i][i]} of component {i} is not +1 or -1"
            )
    return [B[i][i] for i in range(n)]


def observable_split_homology_sphere(p: AmbientLinkPresentation, k: int) -> ObservableValue:
    """Closed form for a split surgery link with +-1 coefficients.

    Each surgery component with coefficient eps acts on the link as a twist,
    contributing eps * t_i^2 with t = C q; no colour sum is needed.
    """
    k = _check_k(k)
    eps = _split_signs(p.surgery)
    t = p.cross_charge()
    exponent = p.link.quadratic_form() - sum(e * x * x for e, x in zip(eps, t))
    return ObservableValue(root_of_unity(4 * k, -exponent))


def push_to_sphere(p: AmbientLinkPresentation, k: int) -> ColouredLinkingData:
    """Build a link in S^3 with the same observable as a homologically trivial link.

    The link is replaced by its simplicial satellite; for a witness n with
    B n = t (mod 2k) we add |n_i| colour-1 parallels of the framing of
    surgery component i, reversed when n_i > 0.  The augmented link has zero
    class mod 2k, so the surgery colour sum factors out of the ratio.
    """
    k = _check_k(k)
    sat = satellite_presentation(p)
    ok, n = is_homologically_trivial(sat, 2 * k)
    if not ok:
        raise NotHomologicallyTrivial(
            "link is not homologically trivial mod 2k; no sphere link exists"
        )
    B, C, L = sat.surgery, sat.cross, sat.link.matrix
    n_link = sat.link.size
    # (kind, index, orientation sign) for every component of the new link
    strands = [("L", a, 1) for a in range(n_link)]
    for i, ni in enumerate(n):
        s = -1 if ni > 0 else 1
        strands += [("F", i, s)] * abs(ni)

    def linking(x, y) -> int:
        (kx, ix, sx), (ky, iy, sy) = x, y
        if kx == "L" and ky == "L":
            return L[ix][iy]
        if kx == "F" and ky == "F":
            return sx * sy * B[ix][iy]
        if kx == "F":
            return sx * C[ix][iy]
        return sy * C[iy][ix]

    m = tuple(tuple(linking(x, y) for y in strands) for x in strands)
    return ColouredLinkingData(m, (1,) * len(strands))


def unknot_union_check(p: AmbientLinkPresentation, colour: int, k: int) -> bool:
    """Adding a distant zero-framed unknot of any colour leaves the observable unchanged."""
    before = observable_surgery(p, k)
    after = observable_surgery(add_unlinked_component(p, 0, colour), k)
    return before == after
