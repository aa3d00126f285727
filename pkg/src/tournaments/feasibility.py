"""Existence tests for score vectors in each tournament class.

Every decision here is an O(n log n) prefix scan; none of them enumerates
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Any, Sequence

from .core import ScoreVector, TournamentClass, as_scores

C = TournamentClass


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    cls: TournamentClass
    witness_k: int | None = None
    reason: str = ""
    derived: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.feasible and self.witness_k is not None:
            raise ValueError("a feasible report carries no witness")

    def __bool__(self) -> bool:
        return self.feasible

    def summary(self) -> str:
        word = "feasible" if self.feasible else "infeasible"
        parts = [f"{self.cls.value}: {word}"]
        if self.witness_k is not None:
            parts.append(f"k={self.witness_k}")
        if self.reason:
            parts.append(self.reason)
        for key, val in self.derived.items():
            if isinstance(val, tuple):
                val = "(" + ",".join(map(str, val)) + ")"
            parts.append(f"{key}={val}")
        return "; ".join(parts)


def _fail(cls: TournamentClass, reason: str, k: int | None = None, **derived) -> FeasibilityReport:
    # infeasible reports that are not tied to a prefix still need some k;
    # use 0 for structural failures (pairing, parity, range)
    return FeasibilityReport(False, cls, 0 if k is None else k, reason, derived)


def binom2(k: int) -> int:
    return k * (k - 1) // 2


def nearly_index(r: Sequence[int]) -> int:
    """Least k with r_j >= r_i - k whenever i < j."""
    best = 0
    running_max = None
    for x in r:
        if running_max is not None and running_max - x > best:
            best = running_max - x
        if running_max is None or x > running_max:
            running_max = x
    return best


def _first_prefix_failure(r: Sequence[int], bound, total) -> int | None:
    """First k (1-based) with prefix sum below bound(k), or n if the total differs."""
    n = len(r)
    for k, s in enumerate(accumulate(r), start=1):
        if s < bound(k):
            return k
    if n and sum(r) != total:
        return n
    return None


def landau_prefix_holds(r: Sequence[int], cls: TournamentClass = C.PLAIN) -> FeasibilityReport:
    """Prefix inequalities sum_{i<=k} r_i >= C(k,2), equality at n, in the given order."""
    r = as_scores(r)
    k = _first_prefix_failure(r, binom2, binom2(len(r)))
    if k is None:
        return FeasibilityReport(True, cls)
    return FeasibilityReport(False, cls, k, "prefix inequality fails")


def exists_plain(r: Sequence[int]) -> FeasibilityReport:
    r = as_scores(r)
    if nearly_index(r) <= 2:
        return landau_prefix_holds(r)
    rep = landau_prefix_holds(sorted(r))
    if rep.feasible:
        return rep
    return FeasibilityReport(False, C.PLAIN, rep.witness_k, "prefix inequality fails (sorted order)")


def exists_loopy(r: Sequence[int]) -> FeasibilityReport:
    r = as_scores(r)
    n = len(r)
    t = binom2(n) + n - sum(r)
    if not 0 <= t <= n:
        return _fail(C.LOOPY, f"loop count n-t out of range (t={t})", t=t)
    s = sorted(r)
    k = _first_prefix_failure(s, lambda k: binom2(k) + max(k - t, 0), binom2(n) + n - t)
    if k is not None:
        return FeasibilityReport(False, C.LOOPY, k, "prefix inequality fails (sorted order)", {"t": t})
    return FeasibilityReport(True, C.LOOPY, derived={"t": t})


def has_hankel_property(r: Sequence[int]) -> bool:
    n = len(r)
    return all(r[i] + r[n - 1 - i] == n - 1 for i in range(n))


def exists_hankel(r: Sequence[int]) -> FeasibilityReport:
    r = as_scores(r)
    n = len(r)
    for i in range(n):
        if r[i] + r[n - 1 - i] != n - 1:
            return _fail(C.HANKEL, f"pair sum r_{i + 1}+r_{n - i} != n-1")
    rep = landau_prefix_holds(sorted(r), C.HANKEL)
    if rep.feasible:
        return rep
    return FeasibilityReport(False, C.HANKEL, rep.witness_k, "prefix inequality fails (sorted order)")


def is_palindromic(r: Sequence[int]) -> bool:
    return tuple(r) == tuple(reversed(r))


def skew_half_prefix_failure(half: Sequence[int]) -> int | None:
    """First k where sum_{i<=k} h_i >= k(k-1) fails (equality required at the end)."""
    h = len(half)
    return _first_prefix_failure(half, lambda k: k * (k - 1), h * (h - 1))


def doubled_prefix_failure(half: Sequence[int]) -> int | None:
    """Same test on the doubled vector (h1,h1,h2,h2,...): sums >= C(l,2) - floor(l/2)."""
    doubled = [x for x in half for _ in range(2)]
    n = len(doubled)
    return _first_prefix_failure(doubled, lambda l: binom2(l) - l // 2, binom2(n) - n // 2)


def exists_skew_hankel(r: Sequence[int]) -> FeasibilityReport:
    r = as_scores(r)
    n = len(r)
    if not is_palindromic(r):
        return _fail(C.SKEW_HANKEL, "score vector is not palindromic")
    h = n // 2
    half = sorted(r[:h])
    if n % 2 == 0:
        k = skew_half_prefix_failure(half)
        if k is not None:
            return FeasibilityReport(False, C.SKEW_HANKEL, k, "half prefix inequality fails (sorted half)")
        return FeasibilityReport(True, C.SKEW_HANKEL)
    mid = r[h]
    if mid % 2:
        return _fail(C.SKEW_HANKEL, "middle score is odd")
    if mid > n - 1:
        return _fail(C.SKEW_HANKEL, "middle score exceeds n-1")
    k = _first_prefix_failure(
        half, lambda k: k * (k - 1) + max(k - mid // 2, 0), h * (h - 1) + max(h - mid // 2, 0)
    )
    if k is not None:
        return FeasibilityReport(False, C.SKEW_HANKEL, k, "half prefix inequality fails (sorted half)")
    return FeasibilityReport(True, C.SKEW_HANKEL)


def reduced_vector(r: Sequence[int], cls: TournamentClass) -> ScoreVector:
    """Score vector of the unlooped class that a loopy variant reduces to.

    Raises ValueError when the pair pattern admits no legal diagonal.
    """
    r = list(as_scores(r))
    n = len(r)
    out = list(r)
    if cls is C.HANKEL_LOOPY:
        for i in range((n + 1) // 2):
            k = n - 1 - i
            s = r[i] + r[k] if i != k else 2 * r[i]
            if s == n + 1:
                out[i] -= 1
                if k != i:
                    out[k] -= 1
            elif s != n - 1:
                raise ValueError(f"pair {i + 1},{k + 1} sums to {s}, need n-1 or n+1")
        return tuple(out)
    if cls is C.SKEW_HANKEL_LOOPY:
        for i in range(n // 2):
            k = n - 1 - i
            d = r[i] - r[k]
            if d == 1:
                out[i] -= 1
            elif d == -1:
                out[k] -= 1
            else:
                raise ValueError(f"pair {i + 1},{k + 1} differs by {d}, need +-1")
        return tuple(out)
    if cls is C.SKEW_HANKEL_DOUBLY_LOOPY:
        for i in range(n // 2):
            k = n - 1 - i
            d = r[i] - r[k]
            if d == 0:
                out[i] -= 1
                out[k] -= 1
            elif d == 2:
                out[i] -= 2
            elif d == -2:
                out[k] -= 2
            else:
                raise ValueError(f"pair {i + 1},{k + 1} differs by {d}, need 0 or +-2")
        return tuple(out)
    raise ValueError(f"{cls.value} is not a loopy variant")


REDUCES_TO = {
    C.HANKEL_LOOPY: C.HANKEL,
    C.SKEW_HANKEL_LOOPY: C.SKEW_HANKEL,
    C.SKEW_HANKEL_DOUBLY_LOOPY: C.SKEW_HANKEL,
}


def reduce_loopy_variant(r: Sequence[int], cls: TournamentClass) -> FeasibilityReport:
    if cls not in REDUCES_TO:
        raise ValueError(f"{cls.value} is not a loopy variant")
    try:
        reduced = reduced_vector(r, cls)
    except ValueError as exc:
        return _fail(cls, str(exc))
    if any(x < 0 for x in reduced):
        return _fail(cls, "reduced vector has a negative entry", reduced=reduced)
    inner = exists(reduced, REDUCES_TO[cls])
    if inner.feasible:
        return FeasibilityReport(True, cls, derived={"reduced": reduced})
    return FeasibilityReport(False, cls, inner.witness_k, "reduced vector infeasible: " + inner.reason,
                             {"reduced": reduced})


def exists(r: Sequence[int], cls: TournamentClass) -> FeasibilityReport:
    """Dispatch to the existence test of the given class."""
    if cls is C.PLAIN:
        return exists_plain(r)
    if cls is C.LOOPY:
        return exists_loopy(r)
    if cls is C.HANKEL:
        return exists_hankel(r)
    if cls is C.SKEW_HANKEL:
        return exists_skew_hankel(r)
    return reduce_loopy_variant(r, cls)
