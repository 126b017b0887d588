"""Colour-space enumeration of quadratic exponents.

Every surgery sum has the shape sum_c zeta_{4k}^{-(c.B.c + 2 c.t + const)}
with c running over a finite set of colours per surgery component.  Rather
than multiplying cyclotomic numbers term by term, the exponent is tallied
into an integer histogram over Z_{4k} and converted once at the end.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .cyclotomic import CyclotomicNumber

ENUMERATION_BOUND = 10**8
THREADS_ENV = "ABELIAN_CS_THREADS"
_INNER_BLOCK = 1 << 16


class EnumerationBoundError(RuntimeError):
    pass


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def check_bound(n_values: int, n_components: int) -> None:
    if n_values**n_components > ENUMERATION_BOUND:
        raise EnumerationBoundError(
            f"colour enumeration needs {n_values}^{n_components} terms, "
            f"above the bound {ENUMERATION_BOUND:.0e}"
        )


def exponent_histogram(
    B: Sequence[Sequence[int]],
    t: Sequence[int] | None,
    modulus: int,
    colour_values: Sequence[int],
    threads: int | None = None,
) -> np.ndarray:
    """Counts h[e] = #{c : c.B.c + 2 c.t == e (mod modulus)}, c in colour_values^N."""
    N = len(B)
    check_bound(len(colour_values), N)
    hist = np.zeros(modulus, dtype=np.int64)
    if N == 0:
        hist[0] = 1
        return hist
    Bm = np.array(B, dtype=object) % modulus
    Bm = Bm.astype(np.int64)
    tm = np.zeros(N, dtype=np.int64) if t is None else np.array([x % modulus for x in t], dtype=np.int64)
    vals = np.array([v % modulus for v in colour_values], dtype=np.int64)
    V = len(vals)

    r = N
    while r > 1 and V**r > _INNER_BLOCK:
        r -= 1
    o = N - r
    X = np.array(list(itertools.product(vals, repeat=r)), dtype=np.int64)
    B_in, B_cross, B_out = Bm[o:, o:], Bm[:o, o:], Bm[:o, :o]
    base = (np.einsum("ai,ij,aj->a", X, B_in, X) + 2 * X @ tm[o:]) % modulus

    def run(prefixes) -> np.ndarray:
        h = np.zeros(modulus, dtype=np.int64)
        for y in prefixes:
            y = np.array(y, dtype=np.int64)
            const = int(y @ B_out @ y + 2 * y @ tm[:o]) % modulus
            w = (2 * (y @ B_cross)) % modulus
            e = (base + X @ w + const) % modulus
            h += np.bincount(e, minlength=modulus)
        return h

    prefixes = list(itertools.product(vals, repeat=o))
    threads = threads or default_threads()
    if threads <= 1 or len(prefixes) < 2 * threads:
        return run(prefixes)
    chunks = [prefixes[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for h in pool.map(run, chunks):
            hist += h
    return hist


def histogram_value(hist: Sequence[int], offset: int = 0) -> CyclotomicNumber:
    """sum_e hist[e] * zeta_M^{-(e + offset)}, M = len(hist)."""
    M = len(hist)
    counts = [0] * M
    for e, n in enumerate(hist):
        if n:
            counts[(e + offset) % M] += int(n)
    return CyclotomicNumber.from_exponent_counts(M, counts, sign=-1)


def colour_sum(
    B: Sequence[Sequence[int]],
    k: int,
    t: Sequence[int] | None = None,
    offset: int = 0,
    colour_values: Sequence[int] | None = None,
    threads: int | None = None,
) -> CyclotomicNumber:
    """sum_c exp{-(2 i pi / 4k) [c.B.c + 2 c.t + offset]} as an exact value in Q(zeta_4k)."""
    if colour_values is None:
        colour_values = range(2 * k)
    hist = exponent_histogram(B, t, 4 * k, list(colour_values), threads)
    return histogram_value(hist, offset)
