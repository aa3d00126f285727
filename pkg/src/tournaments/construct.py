"""Constructors for every class, the loopy lift/fold bijection, and the
pairing-preserving sort used by the recursive Hankel and skew-Hankel builders.

Recursive builders can record their score-vector chain: pass a list as
``trace`` and it receives ``("a", vector)`` after each reduction step and
``("pi", vector)`` after each reordering that actually moves something.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    BinaryMatrix,
    ScoreVector,
    TournamentClass,
    as_scores,
    invert_permutation,
    permute,
    permute_scores,
    require_member,
)
from .feasibility import (
    exists_hankel,
    exists_loopy,
    exists_plain,
    exists_skew_hankel,
    has_hankel_property,
    is_palindromic,
    landau_prefix_holds,
    nearly_index,
    skew_half_prefix_failure,
)

C = TournamentClass
Trace = list[tuple[str, ScoreVector]]


class InfeasibleError(ValueError):
    """Raised when a constructor receives a score vector with no realization."""


class ConstructionError(RuntimeError):
    """An internal recursion invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PairedPermutation:
    """Permutation of 1..n commuting with the pairing i <-> n+1-i."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("not a permutation")
        for i, p in enumerate(self.perm, start=1):
            if self.perm[n - i] != n + 1 - p:
                raise ValueError("permutation does not commute with the pairing")

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply_scores(self, r: Sequence[int]) -> ScoreVector:
        return permute_scores(r, self.perm)

    def apply_matrix(self, m: BinaryMatrix) -> BinaryMatrix:
        return permute(m, self.perm)

    def inverse(self) -> "PairedPermutation":
        return PairedPermutation(invert_permutation(self.perm))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm, start=1))

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]


def _paired_sort(r: Sequence[int], allow_pair_swap: bool) -> PairedPermutation:
    n = len(r)
    vals = list(r)
    at = list(range(n))  # at[position] = original index
    h = n // 2

    def swap(a: int, b: int) -> None:
        vals[a], vals[b] = vals[b], vals[a]
        at[a], at[b] = at[b], at[a]

    if allow_pair_swap:
        for i in range(h):
            if vals[i] > vals[n - 1 - i]:
                swap(i, n - 1 - i)
    for i in range(h):
        best = i
        for j in range(i + 1, h):
            if vals[j] < vals[best]:
                best = j
        if best != i:
            swap(i, best)
            swap(n - 1 - i, n - 1 - best)
    perm = [0] * n
    for pos, orig in enumerate(at):
        perm[orig] = pos + 1
    return PairedPermutation(tuple(perm))


def hankel_sort(r: Sequence[int]) -> PairedPermutation:
    """Pairing-preserving permutation p with r relabelled by p nondecreasing.

    Built from swaps (i, n+1-i) followed by double swaps (i,j)+(n+1-i,n+1-j),
    fixing the smallest out-of-place position first.
    """
    r = as_scores(r)
    if not has_hankel_property(r):
        raise ValueError("score vector lacks the Hankel pair-sum property")
    return _paired_sort(r, allow_pair_swap=True)


def skew_half_sort(r: Sequence[int]) -> PairedPermutation:
    """Pairing-preserving permutation sorting the first half of a palindrome."""
    r = as_scores(r)
    if not is_palindromic(r):
        raise ValueError("score vector is not palindromic")
    return _paired_sort(r, allow_pair_swap=False)


# ---------------------------------------------------------------------------
# plain and loopy

def _build_plain_sorted(s: Sequence[int]) -> BinaryMatrix:
    n = len(s)
    rows = [0] * n
    demand = list(s)
    alive = list(range(n))
    while alive:
        # the weakest remaining player beats the weakest others and loses to the rest
        v = min(alive, key=lambda u: (demand[u], u))
        others = sorted((u for u in alive if u != v), key=lambda u: (demand[u], u))
        wins = demand[v]
        if wins > len(others):
            raise ConstructionError("greedy construction ran out of opponents")
        for u in others[:wins]:
            rows[v] |= 1 << u
        for u in others[wins:]:
            rows[u] |= 1 << v
            demand[u] -= 1
            if demand[u] < 0:
                raise ConstructionError("greedy construction produced a negative demand")
        alive.remove(v)
    return BinaryMatrix(n, tuple(rows))


def build_plain(r: Sequence[int]) -> BinaryMatrix:
    r = as_scores(r)
    rep = exists_plain(r)
    if not rep.feasible:
        raise InfeasibleError(rep.summary())
    m = _build_plain_sorted(r)
    if tuple(x.bit_count() for x in m.rows) != r:
        raise ConstructionError("plain construction missed the score vector")
    return m


def lift_loopy(t: BinaryMatrix) -> BinaryMatrix:
    """Loopy tournament of order n -> plain tournament of order n+1.

    The new vertex is index 1; it beats every vertex without a loop.
    """
    require_member(t, C.LOOPY)
    n = t.n
    rows = [0] * (n + 1)
    for i, r in enumerate(t.rows):
        loop = (r >> i) & 1
        body = r & ~(1 << i)
        rows[i + 1] = (body << 1) | loop
        if not loop:
            rows[0] |= 1 << (i + 1)
    return BinaryMatrix(n + 1, tuple(rows))


def fold(tp: BinaryMatrix) -> BinaryMatrix:
    """Inverse of lift_loopy: drop vertex 1, turning wins over it into loops."""
    require_member(tp, C.PLAIN)
    if tp.n < 1:
        raise ValueError("fold needs order at least 1")
    n = tp.n - 1
    rows = []
    for i in range(n):
        r = tp.rows[i + 1]
        body = r >> 1
        if r & 1:
            body |= 1 << i
        rows.append(body)
    return BinaryMatrix(n, tuple(rows))


def build_loopy(r: Sequence[int]) -> BinaryMatrix:
    r = as_scores(r)
    rep = exists_loopy(r)
    if not rep.feasible:
        raise InfeasibleError(rep.summary())
    t = rep.derived["t"]
    return fold(build_plain((t, *r)))


# ---------------------------------------------------------------------------
# Hankel

def _sort_and_trace(rp: ScoreVector, sorter, trace: Trace | None) -> tuple[PairedPermutation, ScoreVector]:
    p = sorter(rp)
    rs = p.apply_scores(rp)
    if trace is not None:
        trace.append(("a", rp))
        if rs != rp:
            trace.append(("pi", rs))
    return p, rs


def _check_hankel_level(rp: ScoreVector) -> None:
    if not has_hankel_property(rp) or not landau_prefix_holds(sorted(rp)).feasible:
        raise ConstructionError(f"reduced vector {rp} breaks the Hankel invariants")


def _insert_middle(core: BinaryMatrix, col: Sequence[int], row: Sequence[int]) -> BinaryMatrix:
    """Insert a middle row and column into an even-order matrix.

    ``col`` and ``row`` are 0/1 sequences of length n (the full order); their
    middle entries are ignored and the centre is 0.
    """
    n = core.n + 1
    h = core.n // 2
    low_mask = (1 << h) - 1
    rows = []
    for a in range(n):
        if a == h:
            rows.append(sum(1 << j for j in range(n) if j != h and row[j]))
            continue
        src = core.rows[a if a < h else a - 1]
        bits = (src & low_mask) | ((src >> h) << (h + 1))
        if col[a]:
            bits |= 1 << h
        rows.append(bits)
    return BinaryMatrix(n, tuple(rows))


def _wrap_border(core: BinaryMatrix, top: Sequence[int], left: Sequence[int],
                 right: Sequence[int], bottom: Sequence[int]) -> BinaryMatrix:
    """Border a core of order n-2. Sequences are 0/1 of length n; corners are 0."""
    n = core.n + 2
    rows = [0] * n
    rows[0] = sum(1 << j for j in range(1, n) if top[j])
    rows[n - 1] = sum(1 << j for j in range(n - 1) if bottom[j])
    for i in range(1, n - 1):
        bits = core.rows[i - 1] << 1
        if left[i]:
            bits |= 1
        if right[i]:
            bits |= 1 << (n - 1)
        rows[i] = bits
    return BinaryMatrix(n, tuple(rows))


# The recursive builders return (stored, labels): the matrix they describe is
# permute(stored, labels + 1), i.e. stored index k stands for vertex labels[k].
# Relabelling is deferred to the top level so each level costs O(n) row
# operations instead of a full permutation.
Labelled = tuple[BinaryMatrix, list[int]]


def _pull(vec: Sequence[int], labels: Sequence[int]) -> list[int]:
    return [vec[x] for x in labels]


def _wrap_labelled(core: Labelled, top, left, right, bottom) -> Labelled:
    m, lab = core
    n = m.n + 2
    full = [0, *(x + 1 for x in lab), n - 1]
    pulled = [_pull(v, full) for v in (top, left, right, bottom)]
    return _wrap_border(m, *pulled), full


def _insert_labelled(core: Labelled, col, row) -> Labelled:
    m, lab = core
    h = m.n // 2
    emb = [x if x < h else x + 1 for x in lab]
    full = emb[:h] + [h] + emb[h:]
    return _insert_middle(m, _pull(col, full), _pull(row, full)), full


def _relabel(core: Labelled, p: PairedPermutation) -> Labelled:
    """Labels after undoing the sorting permutation p."""
    m, lab = core
    inv = invert_permutation(p.perm)
    return m, [inv[x] - 1 for x in lab]


def _materialize(core: Labelled) -> BinaryMatrix:
    m, lab = core
    return permute(m, [x + 1 for x in lab])


def _hankel_sorted(r: ScoreVector, trace: Trace | None) -> Labelled:
    n = len(r)
    if n <= 1:
        return BinaryMatrix.zeros(n), list(range(n))
    if n % 2 == 0:
        r1 = r[0]
        v = [0] + [0] * (n - r1 - 1) + [1] * r1 + [0]  # v[1..n]
        rp = tuple(r[i] - v[i + 1] - (1 - v[n - i]) for i in range(1, n - 1))
        core = _hankel_core(rp, trace)
        top = [0] + [v[n - j] for j in range(1, n)]          # t_{1,j} = v_{n+1-j}
        left = [0] + [1 - v[n - i] for i in range(1, n)]     # t_{i,1} = 1 - v_{n+1-i}
        right = [0] + [v[i + 1] for i in range(1, n)]        # t_{i,n} = v_i
        bottom = [1 - v[j + 1] for j in range(n)]            # t_{n,j} = 1 - v_j
        return _wrap_labelled(core, top, left, right, bottom)
    h = (n - 1) // 2
    rp = tuple(r[:h]) + tuple(r[i + 1] - 1 for i in range(h, n - 1))
    core = _hankel_core(rp, trace)
    col = [0] * h + [0] + [1] * h
    row = [1] * h + [0] + [0] * h
    return _insert_labelled(core, col, row)


def _hankel_core(rp: ScoreVector, trace: Trace | None) -> Labelled:
    if not rp:
        return BinaryMatrix.zeros(0), []
    _check_hankel_level(rp)
    # the level check has already verified the pair sums
    p, rs = _sort_and_trace(rp, lambda v: _paired_sort(v, allow_pair_swap=True), trace)
    return _relabel(_hankel_sorted(rs, trace), p)


def build_hankel(r: Sequence[int], trace: Trace | None = None) -> BinaryMatrix:
    r = as_scores(r)
    rep = exists_hankel(r)
    if not rep.feasible:
        raise InfeasibleError(rep.summary())
    p = hankel_sort(r)
    rs = p.apply_scores(r)
    if trace is not None and rs != r:
        trace.append(("pi", rs))
    return _materialize(_relabel(_hankel_sorted(rs, trace), p))


# ---------------------------------------------------------------------------
# skew-Hankel

def _check_skew_level(rp: ScoreVector) -> None:
    h = len(rp) // 2
    if not is_palindromic(rp) or nearly_index(rp[:h]) > 2:
        raise ConstructionError(f"reduced vector {rp} is not a 2-nearly nondecreasing palindrome")
    if skew_half_prefix_failure(sorted(rp[:h])) is not None:
        raise ConstructionError(f"reduced vector {rp} breaks the half prefix inequalities")


def _skew_sorted(r: ScoreVector, trace: Trace | None) -> Labelled:
    n = len(r)
    if n <= 1:
        return BinaryMatrix.zeros(n), list(range(n))
    if n % 2 == 0:
        r1 = r[0]
        lo, hi = 2 + (r1 + 1) // 2, n - 1 - r1 // 2
        v = [0] + [1 if lo <= i <= hi else 0 for i in range(1, n + 1)]  # v[1..n]
        rp = tuple(r[i] - v[i + 1] - v[n - i] for i in range(1, n - 1))
        core = _skew_core(rp, trace)
        top = [0] + [1 - v[n - j] for j in range(1, n - 1)] + [0]   # t_{1,j} = 1 - v_{n+1-j}
        left = [0] + [v[n - i] for i in range(1, n - 1)] + [0]      # t_{i,1} = v_{n+1-i}
        right = [0] + [v[i + 1] for i in range(1, n - 1)] + [0]     # t_{i,n} = v_i
        bottom = [0] + [1 - v[j + 1] for j in range(1, n - 1)] + [0]  # t_{n,j} = 1 - v_j
        return _wrap_labelled(core, top, left, right, bottom)
    h = (n - 1) // 2
    mid = r[h]
    half_v = [1 if mid // 2 + 1 <= i <= h else 0 for i in range(1, h + 1)]
    v = half_v + [0] + half_v[::-1]  # 0-based, v[a] = v_{a+1}
    half = tuple(r[i] - half_v[i] for i in range(h))
    rp = half + half[::-1]
    core = _skew_core(rp, trace)
    return _insert_labelled(core, v, [1 - x for x in v])


def _skew_core(rp: ScoreVector, trace: Trace | None) -> Labelled:
    if not rp:
        return BinaryMatrix.zeros(0), []
    _check_skew_level(rp)
    p, rs = _sort_and_trace(rp, lambda v: _paired_sort(v, allow_pair_swap=False), trace)
    return _relabel(_skew_sorted(rs, trace), p)


def build_skew_hankel(r: Sequence[int], trace: Trace | None = None) -> BinaryMatrix:
    r = as_scores(r)
    rep = exists_skew_hankel(r)
    if not rep.feasible:
        raise InfeasibleError(rep.summary())
    p = skew_half_sort(r)
    rs = p.apply_scores(r)
    if trace is not None and rs != r:
        trace.append(("pi", rs))
    return _materialize(_relabel(_skew_sorted(rs, trace), p))


# ---------------------------------------------------------------------------

def build(r: Sequence[int], cls: TournamentClass) -> BinaryMatrix:
    """Class dispatch for the four constructible classes."""
    if cls is C.PLAIN:
        return build_plain(r)
    if cls is C.LOOPY:
        return build_loopy(r)
    if cls is C.HANKEL:
        return build_hankel(r)
    if cls is C.SKEW_HANKEL:
        return build_skew_hankel(r)
    raise ValueError(f"{cls.value} is a reduction-only class and has no constructor")


def chain_vectors(trace: Trace) -> list[ScoreVector]:
    return [vec for _, vec in trace]


def format_chain(start: Sequence[int], trace: Trace) -> str:
    def fmt(v):
        return "(" + ",".join(map(str, v)) + ")"

    parts = [fmt(start)]
    for tag, vec in trace:
        arrow = "->a" if tag == "a" else "->pi"
        parts.append(f"{arrow} {fmt(vec)}")
    return " ".join(parts)
