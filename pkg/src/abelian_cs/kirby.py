"""Kirby moves on linking data, and a reproducible move fuzzer.

Random choices come from a 64-bit linear congruential generator

    x <- (6364136223846793005 * x + 1442695040888963407) mod 2^64

seeded with ``seed mod 2^64``; each draw uses the top 32 bits, reduced
modulo the range.  Move selection per step: draw % 4 picks
stabilize_plus, stabilize_minus, destabilize, handle_slide.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .enumeration import ENUMERATION_BOUND
from .homology import first_homology
from .invariants import InvariantUndefined, rt_invariant, subgroup_invariant
from .links import AmbientLinkPresentation, PreconditionError
from .observables import observable_surgery

MoveKind = Literal["stabilize_plus", "stabilize_minus", "destabilize", "handle_slide"]


@dataclass(frozen=True)
class KirbyMove:
    kind: MoveKind
    i: int | None = None
    j: int | None = None
    sign: int = 1

    def __str__(self):
        if self.kind == "handle_slide":
            return f"handle_slide({self.i}, {self.j}, {self.sign:+d})"
        if self.kind == "destabilize":
            return f"destabilize({self.i})"
        return self.kind


def stabilize(p: AmbientLinkPresentation, sign: int) -> AmbientLinkPresentation:
    """Add a distant unknot with surgery coefficient +-1."""
    if sign not in (1, -1):
        raise PreconditionError("stabilization sign must be +1 or -1")
    n = p.n_surgery
    B = tuple(r + (0,) for r in p.surgery) + ((0,) * n + (sign,),)
    C = p.cross + ((0,) * p.link.size,)
    return AmbientLinkPresentation(B, p.link, C)


def destabilizable(p: AmbientLinkPresentation) -> list[int]:
    out = []
    for i in range(p.n_surgery):
        row = p.surgery[i]
        if row[i] in (1, -1) and not any(x for j, x in enumerate(row) if j != i) and not any(p.cross[i]):
            out.append(i)
    return out


def destabilize(p: AmbientLinkPresentation, i: int) -> AmbientLinkPresentation:
    """Remove a +-1 component that links nothing; the inverse of :func:`stabilize`."""
    if i not in destabilizable(p):
        raise PreconditionError(f"surgery component {i} is not an isolated +-1 unknot")
    keep = [a for a in range(p.n_surgery) if a != i]
    B = tuple(tuple(p.surgery[a][b] for b in keep) for a in keep)
    C = tuple(p.cross[a] for a in keep)
    return AmbientLinkPresentation(B, p.link, C)


def handle_slide(p: AmbientLinkPresentation, i: int, j: int, sign: int) -> AmbientLinkPresentation:
    """Slide surgery component i over j: B -> E^T B E, C -> E^T C with E = I + sign e_j e_i^T."""
    n = p.n_surgery
    if not (0 <= i < n and 0 <= j < n):
        raise PreconditionError(f"indices ({i}, {j}) out of range for {n} surgery components")
    if i == j:
        raise PreconditionError("cannot slide a component over itself")
    if sign not in (1, -1):
        raise PreconditionError("slide sign must be +1 or -1")
    B = [list(r) for r in p.surgery]
    B[i] = [x + sign * y for x, y in zip(B[i], B[j])]
    for r in B:
        r[i] += sign * r[j]
    C = [list(r) for r in p.cross]
    C[i] = [x + sign * y for x, y in zip(C[i], C[j])]
    return AmbientLinkPresentation(tuple(map(tuple, B)), p.link, tuple(map(tuple, C)))


def apply_move(p: AmbientLinkPresentation, move: KirbyMove) -> AmbientLinkPresentation:
    if move.kind == "stabilize_plus":
        return stabilize(p, 1)
    if move.kind == "stabilize_minus":
        return stabilize(p, -1)
    if move.kind == "destabilize":
        return destabilize(p, move.i)
    if move.kind == "handle_slide":
        return handle_slide(p, move.i, move.j, move.sign)
    raise PreconditionError(f"unknown move kind {move.kind!r}")


class LCG:
    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return (self.state >> 32) % n


def random_move_sequence(
    p: AmbientLinkPresentation,
    length: int,
    seed: int,
    k: int | None = None,
    max_components: int | None = None,
) -> tuple[AmbientLinkPresentation, list[str]]:
    """Apply ``length`` pseudo-random Kirby moves; returns the result and a move log.

    Stabilizations that would push the colour enumeration for coupling ``k``
    past the bound (or past ``max_components``) are skipped and logged, as are
    destabilizations and slides with no legal target.
    """
    if length < 0:
        raise PreconditionError("length must be >= 0")
    rng = LCG(seed)
    log: list[str] = []
    for _ in range(length):
        choice = rng.next(4)
        n = p.n_surgery
        if choice in (0, 1):
            too_big = (k is not None and (2 * k) ** (n + 1) > ENUMERATION_BOUND) or (
                max_components is not None and n + 1 > max_components
            )
            if too_big:
                log.append("skip: stabilization would exceed the enumeration bound")
                continue
            move = KirbyMove("stabilize_plus" if choice == 0 else "stabilize_minus")
        elif choice == 2:
            cands = destabilizable(p)
            if not cands:
                log.append("skip: no isolated +-1 component to destabilize")
                continue
            move = KirbyMove("destabilize", cands[rng.next(len(cands))])
        else:
            if n < 2:
                log.append("skip: handle slide needs two surgery components")
                continue
            i = rng.next(n)
            j = rng.next(n - 1)
            j = j + 1 if j >= i else j
            move = KirbyMove("handle_slide", i, j, 1 if rng.next(2) else -1)
        p = apply_move(p, move)
        log.append(str(move))
    return p, log


@dataclass
class KirbyCheckReport:
    before: dict
    after: dict
    log: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def invariant_profile(p: AmbientLinkPresentation, k: int) -> dict:
    """Everything that Kirby moves must preserve, computed exactly."""
    prof = {
        "rt": rt_invariant(p.surgery, k).value,
        "homology": first_homology(p.surgery),
    }
    for d in range(1, 2 * k + 1):
        if (2 * k) % d == 0:
            try:
                prof[f"subgroup_{d}"] = subgroup_invariant(p.surgery, k, d).value
            except InvariantUndefined:
                prof[f"subgroup_{d}"] = None
    obs = observable_surgery(p, k, strict=False)
    prof["observable"] = obs.value if obs.defined else None
    return prof


def kirby_check(p: AmbientLinkPresentation, k: int, moves: int, seed: int) -> KirbyCheckReport:
    before = invariant_profile(p, k)
    q, log = random_move_sequence(p, moves, seed, k=k)
    after = invariant_profile(q, k)
    report = KirbyCheckReport(before, after, log)
    for key, v in before.items():
        w = after[key]
        if v is None or w is None:
            if key == "observable" or v is w:
                continue
        if v != w:
            report.mismatches.append(f"{key}: {v} != {w}")
    return report
