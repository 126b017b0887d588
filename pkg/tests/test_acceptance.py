"""Acceptance suite: fifteen checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (lines are printed even
without ``-s``) or directly as ``python tests/test_acceptance.py``.
Exact comparisons are coefficient-wise in the cyclotomic field; numeric
comparisons use a tolerance of 1e-9 on the complex embedding.
"""
from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from abelian_cs.cyclotomic import root_of_unity, sqrt_positive_integer  # noqa: E402
from abelian_cs.homology import first_homology, is_homologically_trivial  # noqa: E402
from abelian_cs.invariants import (  # noqa: E402
    catalog,
    connected_sum,
    genus_times_circle,
    lens_closed_form,
    lens_presentation,
    reciprocity_sides,
    rt_invariant,
    subgroup_invariant,
)
from abelian_cs.kirby import invariant_profile, random_move_sequence  # noqa: E402
from abelian_cs.links import (  # noqa: E402
    AmbientLinkPresentation,
    ColouredLinkingData,
    equivalent_knot,
    satellite_presentation,
    simplicial_satellite,
    sum_components,
)
from abelian_cs.observables import (  # noqa: E402
    observable_s3,
    observable_split_homology_sphere,
    observable_surgery,
    push_to_sphere,
    unknot_union_check,
)

from gen import random_link, random_presentation, random_split_presentation  # noqa: E402

TOL = 1e-9
i = root_of_unity(4, 1)
sqrt3 = sqrt_positive_integer(3)


def _all(checks):
    failed = [name for name, ok in checks if not ok]
    return not failed, ("failed: " + ", ".join(failed[:5])) if failed else f"{len(checks)} checks"


def c01_special_cases():
    checks = []
    for k in range(1, 6):
        checks.append((f"S3 k={k}", rt_invariant([], k).value == 1))
        checks.append((f"S2xS1 k={k}", rt_invariant([[0]], k).value == sqrt_positive_integer(2 * k)))
    return _all(checks)


def c02_lens_5():
    a = rt_invariant(lens_presentation(5, 1), 2).value
    b = rt_invariant(lens_presentation(5, 2), 2).value
    return a == -1 and b == 1, f"I_2(L5/1)={a}, I_2(L5/2)={b}"


def c03_lens_9():
    a = rt_invariant(lens_presentation(9, 1), 3).value
    b = rt_invariant(lens_presentation(9, 2), 3).value
    h1, h2 = first_homology(lens_presentation(9, 1)), first_homology(lens_presentation(9, 2))
    ok = a == i * sqrt3 and b == -i * sqrt3 and a == b.conjugate() and h1 == h2
    return ok, f"I_3(L9/1)={a}, I_3(L9/2)={b}, H1={h1} and {h2}"


def c04_lens_7():
    a = rt_invariant(lens_presentation(7, 1), 3).value
    b = rt_invariant(lens_presentation(7, 2), 3).value
    return a == b == -i, f"I_3(L7/1)={a}, I_3(L7/2)={b}"


def c05_connected_sums():
    a = rt_invariant(connected_sum(lens_presentation(9, 1), lens_presentation(7, 1)), 3).value
    b = rt_invariant(connected_sum(lens_presentation(9, 2), lens_presentation(7, 2)), 3).value
    return a == sqrt3 and b == -sqrt3, f"{a} and {b}"


def c06_lens_closed_form():
    return _all(
        [(f"p={p} k={k}", rt_invariant([[p]], k).value == lens_closed_form(p, k).value)
         for p in range(2, 13) for k in range(1, 5)]
    )


def c07_genus_times_circle():
    return _all(
        [(f"g={g} k={k}", rt_invariant(genus_times_circle(g), k).value == sqrt_positive_integer(2 * k) ** (2 * g + 1))
         for g in range(3) for k in range(1, 4)]
    )


def c08_homology_spheres():
    rng = random.Random(8)
    checks = []
    for n in range(200):
        size = rng.randint(1, 6)
        B = [[0] * size for _ in range(size)]
        for j in range(size):
            B[j][j] = rng.choice([1, -1])
        k = rng.randint(1, 4)
        checks.append((f"#{n}", rt_invariant(B, k).value == 1))
    return _all(checks)


def c09_split_closed_form():
    rng = random.Random(9)
    checks = []
    for n in range(200):
        p, k = random_split_presentation(rng, 3, 3), rng.randint(1, 3)
        checks.append((f"#{n}", observable_split_homology_sphere(p, k) == observable_surgery(p, k)))
    return _all(checks)


def c10_kirby_fuzz():
    rng = random.Random(10)
    checks = []
    compared_observables = 0
    for n in range(500):
        p = random_presentation(rng, max_surgery=4, max_link=3)
        k = rng.randint(1, 3)
        before = invariant_profile(p, k)
        q, _ = random_move_sequence(p, rng.randint(0, 8), seed=n, k=k, max_components=6)
        after = invariant_profile(q, k)
        ok = True
        for key, v in before.items():
            w = after[key]
            if key == "observable":
                if v is None or w is None:
                    continue
                compared_observables += 1
            if v != w:
                ok = False
        checks.append((f"#{n}", ok))
    ok, detail = _all(checks)
    return ok, f"{detail}, {compared_observables} defined observables compared"


def c11_structural():
    rng = random.Random(11)
    need = 200
    checks: dict[str, list[bool]] = {
        "satellite": [], "surgery satellite": [], "sum": [], "equivalent knot": [],
        "periodicity": [], "unknot union": [],
    }
    while min(len(v) for v in checks.values()) < need:
        link, k = random_link(rng, 4, 4, 5), rng.randint(1, 4)
        base = observable_s3(link, k)
        checks["satellite"].append(observable_s3(simplicial_satellite(link), k) == base)
        knot = ColouredLinkingData.from_lists([[equivalent_knot(link)]], [1])
        checks["equivalent knot"].append(observable_s3(knot, k).value == base.value)
        pairs = [(a, b) for a in range(link.size) for b in range(a + 1, link.size)
                 if link.colours[a] == link.colours[b]]
        if pairs:
            a, b = rng.choice(pairs)
            checks["sum"].append(observable_s3(sum_components(link, a, b), k) == base)

        p, k = random_presentation(rng), rng.randint(1, 3)
        obs = observable_surgery(p, k, strict=False)
        checks["surgery satellite"].append(observable_surgery(satellite_presentation(p), k, strict=False) == obs)
        if p.link.size:
            shifted = list(p.link.colours)
            shifted[rng.randrange(len(shifted))] += 2 * k * rng.choice([1, -1, 2])
            q = AmbientLinkPresentation(p.surgery, ColouredLinkingData(p.link.matrix, tuple(shifted)), p.cross)
            checks["periodicity"].append(observable_surgery(q, k, strict=False) == obs)
        if obs.defined:
            checks["unknot union"].append(unknot_union_check(p, rng.randint(-6, 6), k))
    failed = [name for name, results in checks.items() if not all(results)]
    detail = ", ".join(f"{name} {len(results)}" for name, results in checks.items())
    return not failed, (f"failed: {', '.join(failed)}; " if failed else "") + detail


def c12_s2xs1_vanishing():
    checks = []
    for k in range(1, 4):
        for t in range(4 * k + 1):
            p = AmbientLinkPresentation([[0]], ColouredLinkingData.from_lists([[0]], [1]), [[t]])
            v = observable_surgery(p, k).value
            checks.append((f"k={k} t={t}", v.is_zero() == (t % (2 * k) != 0)))
    return _all(checks)


def c13_push_to_sphere():
    rng = random.Random(13)
    checks = []
    tried = 0
    while len(checks) < 100:
        tried += 1
        p, k = random_presentation(rng, min_surgery=1), rng.randint(1, 3)
        if not is_homologically_trivial(satellite_presentation(p), 2 * k)[0]:
            continue
        target = observable_surgery(p, k, strict=False)
        if not target.defined:
            continue
        checks.append((f"#{len(checks)}", observable_s3(push_to_sphere(p, k), k) == target))
    ok, detail = _all(checks)
    return ok, f"{detail} (from {tried} draws)"


def c14_subgroup_consistency():
    checks = []
    for name, B in catalog().items():
        for k in range(1, 4):
            checks.append((f"{name} p=2k k={k}", subgroup_invariant(B, k, 2 * k).value == rt_invariant(B, k).value))
            checks.append((f"{name} p=1 k={k}", subgroup_invariant(B, k, 1).value == 1))
    return _all(checks)


def c15_reciprocity():
    checks = []
    for a in range(-6, 7):
        for c in range(-6, 7):
            for b in range(-8, 9):
                if a * c == 0 or (a * c + b) % 2:
                    continue
                left, right = reciprocity_sides(a, b, c)
                exact = left == right
                numeric = abs(left.embed() - right.embed()) < TOL
                checks.append((f"({a},{b},{c})", exact and numeric))
    return _all(checks)


CRITERIA = [
    ("C01", "I_k(S3)=1 and I_k(S2xS1)=sqrt(2k), k=1..5", c01_special_cases),
    ("C02", "I_2(L5/1)=-1, I_2(L5/2)=1", c02_lens_5),
    ("C03", "I_3(L9/1)=i sqrt3, I_3(L9/2)=-i sqrt3, same H1", c03_lens_9),
    ("C04", "I_3(L7/1)=I_3(L7/2)=-i", c04_lens_7),
    ("C05", "connected sums give sqrt3 and -sqrt3", c05_connected_sums),
    ("C06", "lens closed form equals rt, p<=12, k<=4", c06_lens_closed_form),
    ("C07", "Sigma_g x S1 gives (2k)^((2g+1)/2)", c07_genus_times_circle),
    ("C08", "homology spheres give 1 (200 random)", c08_homology_spheres),
    ("C09", "split closed form equals surgery sum (200 random)", c09_split_closed_form),
    ("C10", "Kirby fuzz, 500 cases", c10_kirby_fuzz),
    ("C11", "structural invariances (200 random each)", c11_structural),
    ("C12", "S2xS1 vanishing iff t != 0 mod 2k", c12_s2xs1_vanishing),
    ("C13", "push to sphere preserves the observable (100 random)", c13_push_to_sphere),
    ("C14", "subgroup invariant at p=2k and p=1", c14_subgroup_consistency),
    ("C15", "Gauss sum reciprocity, |a|,|c|<=6, |b|<=8", c15_reciprocity),
]


def _line(tag, title, ok, detail, seconds):
    return f"{'PASS' if ok else 'FAIL'} {tag} {title}: {detail} [{seconds:.2f}s]"


@pytest.mark.parametrize("tag, title, check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(tag, title, check, capsys):
    t0 = time.perf_counter()
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(tag, title, ok, detail, time.perf_counter() - t0))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for tag, title, check in CRITERIA:
        t0 = time.perf_counter()
        ok, detail = check()
        failures += not ok
        print(_line(tag, title, ok, detail, time.perf_counter() - t0))
    sys.exit(1 if failures else 0)
