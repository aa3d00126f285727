"""Random feasible score vectors, produced by random walks that start at a
(near-)regular vector and only take steps that stay feasible."""

from __future__ import annotations

import random

from .core import ScoreVector, TournamentClass
from .feasibility import binom2, exists

C = TournamentClass


def regular_vector(n: int, cls: TournamentClass) -> ScoreVector:
    """A feasible vector with scores as equal as the class allows."""
    if cls in (C.PLAIN, C.LOOPY):
        total = binom2(n) + (n // 2 if cls is C.LOOPY else 0)
        q, rem = divmod(total, n)
        r = [q] * (n - rem) + [q + 1] * rem
        return tuple(r)
    if cls is C.HANKEL:
        h = n // 2
        if n % 2:
            return ((n - 1) // 2,) * n
        return ((n - 2) // 2,) * h + (n // 2,) * h
    if cls is C.SKEW_HANKEL:
        h = n // 2
        if n % 2 == 0:
            return (h - 1,) * n
        if h == 0:
            return (0,)
        mid = (n - 1) // 2
        mid -= mid % 2
        total = ((n - 1) ** 2 // 2 - mid) // 2  # sum of the first half
        q, rem = divmod(total, h)
        half = [q] * (h - rem) + [q + 1] * rem
        r = tuple(half) + (mid,) + tuple(reversed(half))
        if exists(r, cls):
            return r
        half = [2 * k + 1 for k in range(h)]
        return tuple(half) + (0,) + tuple(reversed(half))
    raise ValueError(f"no sampler for {cls.value}")


def _step(r: list[int], n: int, cls: TournamentClass, rng: random.Random) -> list[int]:
    out = list(r)
    if cls in (C.PLAIN, C.LOOPY):
        if cls is C.LOOPY and (n < 2 or rng.random() < 0.25):
            i = rng.randrange(n)
            out[i] += rng.choice((-1, 1))  # add or remove a loop
        elif n >= 2:
            i, j = rng.sample(range(n), 2)
            out[i] += 1
            out[j] -= 1
    elif cls is C.HANKEL:
        i = rng.randrange(n)
        k = n - 1 - i
        if i == k:
            return out
        out[i] += 1
        out[k] -= 1
    else:
        h = n // 2
        if n % 2 and rng.random() < 0.2:
            i = rng.randrange(h)
            d = rng.choice((-1, 1))
            out[h] += 2 * d
            out[i] -= d
            out[n - 1 - i] -= d
        elif h >= 2:
            i, j = rng.sample(range(h), 2)
            for a, d in ((i, 1), (j, -1)):
                out[a] += d
                out[n - 1 - a] += d
    return out


def _shuffle(r: list[int], cls: TournamentClass, rng: random.Random) -> list[int]:
    n = len(r)
    if cls in (C.PLAIN, C.LOOPY):
        rng.shuffle(r)
        return r
    # pairing-preserving shuffle; Hankel pairs may also swap their two ends
    h = n // 2
    order = list(range(h))
    rng.shuffle(order)
    out = list(r)
    for a, b in enumerate(order):
        x, y = r[b], r[n - 1 - b]
        if cls is C.HANKEL and rng.random() < 0.5:
            x, y = y, x
        out[a], out[n - 1 - a] = x, y
    return out


def random_feasible(n: int, cls: TournamentClass, rng: random.Random, steps: int | None = None) -> ScoreVector:
    """Random walk of ``steps`` proposals (default n) from the regular vector,
    rejecting any proposal that leaves the feasibility region; the result is
    finally reordered at random within the class's symmetry."""
    r = list(regular_vector(n, cls))
    for _ in range(n if steps is None else steps):
        cand = _step(r, n, cls, rng)
        if min(cand, default=0) >= 0 and exists(cand, cls):
            r = cand
    return tuple(_shuffle(r, cls, rng))
