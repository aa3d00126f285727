"""Constructive switch paths between two tournaments of the same class and score.

Every path finder returns a ``MovePath`` whose replay stays inside the class at
every step. Plain and skew-Hankel paths work directly on the difference
digraph of the two matrices; Hankel paths route both matrices to the
canonical output of the recursive builder and splice the halves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .construct import build_hankel, fold, hankel_sort, lift_loopy
from .core import (
    BinaryMatrix,
    TournamentClass,
    invert_permutation,
    is_member,
    permute,
    score_vector,
    submatrix,
)
from .switches import Move, MoveError, apply_move, apply_raw, format_moves, replay

C = TournamentClass


class PathError(RuntimeError):
    """A path finder could not make progress; indicates a bug."""


def _cap(n: int) -> int:
    # iteration guard for the proof loops
    return n ** 3 + 1


@dataclass(frozen=True)
class MovePath:
    start: BinaryMatrix
    moves: tuple[Move, ...]
    cls: TournamentClass

    def replay(self) -> list[BinaryMatrix]:
        """All matrices along the path, start included; validates every step."""
        out = [self.start]
        out.extend(replay(self.start, self.moves, self.cls))
        return out

    @property
    def end(self) -> BinaryMatrix:
        return self.replay()[-1]

    def reversed(self) -> "MovePath":
        n = self.start.n
        return MovePath(self.end, tuple(mv.inverse(n) for mv in reversed(self.moves)), self.cls)

    def __len__(self) -> int:
        return len(self.moves)

    def to_text(self) -> str:
        return self.start.to_text() + format_moves(self.moves)


@dataclass
class DifferenceDigraph:
    """Edges i->j (0-based) where the first matrix has a 1 and the second a 0."""

    n: int
    out: list[int] = field(default_factory=list)  # bitmask of successors

    @classmethod
    def of(cls, t1: BinaryMatrix, t2: BinaryMatrix) -> "DifferenceDigraph":
        n = t1.n
        out = []
        for i in range(n):
            out.append(t1.rows[i] & ~t2.rows[i] & ~(1 << i))
        return cls(n, out)

    def edge_count(self) -> int:
        return sum(x.bit_count() for x in self.out)

    def has(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def successors(self, u: int) -> list[int]:
        r = self.out[u]
        res = []
        while r:
            low = r & -r
            res.append(low.bit_length() - 1)
            r ^= low
        return res

    def is_balanced(self) -> bool:
        indeg = [0] * self.n
        for u in range(self.n):
            for v in self.successors(u):
                indeg[v] += 1
        return all(indeg[u] == self.out[u].bit_count() for u in range(self.n))

    def shortest_path(self, src: int, dst: int, avoid: frozenset[int] = frozenset()) -> list[int] | None:
        prev = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return path[::-1]
            for v in self.successors(u):
                if v not in prev and (v == dst or v not in avoid):
                    prev[v] = u
                    queue.append(v)
        return None

    def find_cycle(self) -> list[int] | None:
        """Some directed cycle, found by walking smallest successors."""
        start = next((u for u in range(self.n) if self.out[u]), None)
        if start is None:
            return None
        seen: dict[int, int] = {}
        walk = []
        u = start
        while u not in seen:
            seen[u] = len(walk)
            walk.append(u)
            succ = self.successors(u)
            if not succ:
                raise PathError("difference digraph is not balanced")
            u = succ[0]
        return walk[seen[u]:]


# ---------------------------------------------------------------------------
# cycle reversal by 3-cycle switches

class _Walker:
    """Applies moves to a working matrix and records them.

    Only the switch patterns are checked here; class membership is checked
    once, when the finished path is replayed.
    """

    def __init__(self, m: BinaryMatrix, cls: TournamentClass):
        self.m = m
        self.cls = cls
        self.moves: list[Move] = []

    def do(self, mv: Move) -> None:
        self.m = apply_raw(self.m, mv)
        self.moves.append(mv)

    def bit(self, i: int, j: int) -> int:
        return self.m.bit(i, j)


def _reverse_cycle(w: _Walker, cyc: Sequence[int], kind: str) -> None:
    """Reverse a directed cycle (0-based vertices) of the working matrix with a
    fan of triangle moves of the given kind; chords end where they began."""
    if len(cyc) < 3:
        raise PathError(f"cannot reverse a cycle of length {len(cyc)}")
    if len(cyc) == 3:
        w.do(Move(kind, tuple(v + 1 for v in cyc)))
        return
    v0, v1, v2 = cyc[0], cyc[1], cyc[2]
    tri = Move(kind, (v0 + 1, v1 + 1, v2 + 1))
    rest = [v0, *cyc[2:]]
    if w.bit(v2, v0):
        w.do(tri)
        _reverse_cycle(w, rest, kind)
    else:
        _reverse_cycle(w, rest, kind)
        w.do(tri)


def _check_same(t1: BinaryMatrix, t2: BinaryMatrix, cls: TournamentClass) -> None:
    if t1.n != t2.n:
        raise ValueError("matrices have different orders")
    for name, t in (("T1", t1), ("T2", t2)):
        if not is_member(t, cls):
            raise ValueError(f"{name} is not a {cls.value} tournament")
    if score_vector(t1) != score_vector(t2):
        raise ValueError("matrices have different score vectors")


# ---------------------------------------------------------------------------
# plain and loopy

def _plain_moves(t1: BinaryMatrix, t2: BinaryMatrix) -> list[Move]:
    w = _Walker(t1, C.PLAIN)
    d = DifferenceDigraph.of(w.m, t2)
    while True:
        cyc = d.find_cycle()
        if cyc is None:
            break
        before = d.edge_count()
        _reverse_cycle(w, cyc, "T")
        d = DifferenceDigraph.of(w.m, t2)
        if d.edge_count() >= before:
            raise PathError("cycle reversal did not shrink the difference digraph")
    return w.moves


def path_plain(t1: BinaryMatrix, t2: BinaryMatrix) -> MovePath:
    _check_same(t1, t2, C.PLAIN)
    return MovePath(t1, tuple(_plain_moves(t1, t2)), C.PLAIN)


def path_loopy(t1: BinaryMatrix, t2: BinaryMatrix) -> MovePath:
    _check_same(t1, t2, C.LOOPY)
    moves = []
    for mv in _plain_moves(lift_loopy(t1), lift_loopy(t2)):
        i, j, k = mv.idx
        if 1 in mv.idx:
            # rotate so the adjoined vertex comes first: 0 -> a -> b -> 0 is an edge-loop switch
            while i != 1:
                i, j, k = j, k, i
            moves.append(Move("EL", (j - 1, k - 1)))
        else:
            moves.append(Move("T", (i - 1, j - 1, k - 1)))
    return MovePath(t1, tuple(moves), C.LOOPY)


# ---------------------------------------------------------------------------
# Hankel

def _quad_pair_moves(w: _Walker, cyc: Sequence[int]) -> None:
    """Reverse a pure 4-cycle (1-based) and its mirror with two HP3 moves."""
    a, b, c, d = cyc
    m = w.m
    options = []
    if m[c, a]:
        options.append([(a, b, c), (a, c, d)])
    else:
        options.append([(c, d, a), (a, b, c)])
    if m[b, d]:
        options.append([(d, a, b), (b, c, d)])
    else:
        options.append([(b, c, d), (d, a, b)])
    for opt in options:
        trial = w.m
        try:
            for tri in opt:
                trial = apply_move(trial, Move("HP3", tri), C.HANKEL)
        except MoveError:
            continue
        for tri in opt:
            w.do(Move("HP3", tri))
        return
    raise PathError(f"no pure triangle split for 4-cycle {cyc}")


def _fix_first_column(w: _Walker) -> None:
    n = w.m.n
    r1 = w.m.rows[0].bit_count()
    target = [0] * (r1 + 1) + [1] * (n - r1 - 1)
    mir = lambda x: n + 1 - x  # noqa: E731
    for _ in range(_cap(n)):
        col = [w.m.bit(x, 0) for x in range(n)]
        if col == target:
            return
        i = next(x for x in range(1, n) if col[x]) + 1  # 1-based
        m = w.m
        if col[n - 1] == 0:
            x = next(x for x in range(2, n // 2 + 1) if col[x - 1] and col[mir(x) - 1])
            if m[x, mir(x)]:
                w.do(Move("H4", (n, x)))
            else:
                w.do(Move("H4", (n, mir(x))))
            continue
        mi = mir(i)
        if i <= n // 2 and col[mi - 1] == 0:
            ks = [k for k in range(2, n) if k not in (i, mi) and not m[i, k] and m[mi, k]]
            for k in ks:
                try:
                    _quad_pair_moves(w, (1, mi, k, i))
                    break
                except PathError:
                    continue
            else:
                raise PathError("no usable 4-cycle for the paired-row case")
            continue
        j = next(j for j in range(i + 1, n + 1) if col[j - 1] == 0 and j != mi)
        if m[j, i]:
            w.do(Move("HP3", (1, j, i)))
            continue
        ks = [k for k in range(2, n + 1)
              if k not in (i, j, mi, mir(j)) and not m[i, k] and m[j, k]]
        for k in ks:
            try:
                _quad_pair_moves(w, (1, j, k, i))
                break
            except PathError:
                continue
        else:
            raise PathError("no usable 4-cycle for the general case")
    raise PathError("first column did not converge")


def _fix_middle_row(w: _Walker, target: BinaryMatrix) -> None:
    n = w.m.n
    c = n // 2  # 0-based middle
    mir = lambda x: n - 1 - x  # noqa: E731 (0-based)
    for _ in range(_cap(n)):
        if w.m.rows[c] == target.rows[c]:
            return
        d = DifferenceDigraph.of(w.m, target)
        i1 = d.successors(c)[0]
        path = d.shortest_path(i1, c)
        if path is None:
            raise PathError("no difference cycle through the middle vertex")
        seq = path[:-1]  # i_1 .. i_k, 0-based
        bit = w.bit
        if bit(seq[0], mir(seq[0])):
            w.do(Move("H3M", (mir(seq[0]) + 1,)))
            continue
        done = False
        for j in range(1, len(seq)):
            ij = seq[j]
            if bit(ij, mir(ij)):
                chain_from = j
                w.do(Move("H4", (seq[j - 1] + 1, ij + 1)))
                start = j - 1
            else:
                hs = [h for h in range(j) if bit(ij, mir(seq[h]))]
                if not hs:
                    continue
                h = hs[0]
                w.do(Move("H4", (seq[h] + 1, mir(ij) + 1)))
                start = h
            for l in range(start, 0, -1):
                w.do(Move("H4", (seq[l - 1] + 1, seq[l] + 1)))
            w.do(Move("H3M", (mir(seq[0]) + 1,)))
            done = True
            break
        if not done:
            cyc = [c, *seq]
            if len({*cyc} & {mir(x) for x in seq}):
                raise PathError("middle cycle is not mirror-free")
            _reverse_cycle(w, cyc, "HP3")
    if w.m.rows[c] != target.rows[c]:
        raise PathError("middle row did not converge")


def _lift_moves(moves: Sequence[Move], f) -> list[Move]:
    return [mv.relabel(f) for mv in moves]


def _hankel_to_canonical(t: BinaryMatrix) -> list[Move]:
    """Moves taking a Hankel tournament with nondecreasing scores to the builder's output."""
    n = t.n
    if n <= 2:
        return []  # a Hankel class with sorted scores has one member here
    w = _Walker(t, C.HANKEL)
    if n % 2 == 0:
        _fix_first_column(w)
        keep = list(range(1, n - 1))
        embed = lambda a: a + 1  # noqa: E731
    else:
        r = score_vector(t)
        _fix_middle_row(w, build_hankel(r))  # r is sorted, so no relabelling happens
        h = n // 2
        keep = [x for x in range(n) if x != h]
        embed = lambda a: a if a <= h else a + 1  # noqa: E731
    core = submatrix(w.m, keep)
    p = hankel_sort(score_vector(core))
    inv = invert_permutation(p.perm)
    sub = _hankel_to_canonical(permute(core, p.perm))
    for mv in _lift_moves(sub, lambda a: embed(inv[a - 1])):
        w.do(mv)
    return w.moves


def path_hankel(t1: BinaryMatrix, t2: BinaryMatrix) -> MovePath:
    _check_same(t1, t2, C.HANKEL)
    n = t1.n
    p = hankel_sort(score_vector(t1))
    inv = invert_permutation(p.perm)
    a = _hankel_to_canonical(permute(t1, p.perm))
    b = _hankel_to_canonical(permute(t2, p.perm))
    moves = _cancel(a + [mv.inverse(n) for mv in reversed(b)], n)
    return MovePath(t1, tuple(_lift_moves(moves, lambda x: inv[x - 1])), C.HANKEL)


def _cancel(moves: Sequence[Move], n: int) -> list[Move]:
    """Drop adjacent move/inverse pairs; the two legs through the canonical
    matrix often share a tail, and equal endpoints cancel completely."""
    out: list[Move] = []
    for mv in moves:
        if out and out[-1].inverse(n) == mv:
            out.pop()
        else:
            out.append(mv)
    return out


# ---------------------------------------------------------------------------
# skew-Hankel

def _mirror_free_middle_cycle(d: DifferenceDigraph, cyc: list[int]) -> list[int]:
    """Shorten a difference cycle through the middle vertex until it holds no
    vertex together with its mirror (cyc[0] is the middle)."""
    n = d.n
    mir = lambda x: n - 1 - x  # noqa: E731
    for _ in range(_cap(n)):
        k = len(cyc) - 1
        pos = {v: p for p, v in enumerate(cyc)}
        V = [p for p in range(1, k + 1) if mir(cyc[p]) in pos]
        if not V:
            return cyc
        a, cc = min(V), max(V)
        b, dd = pos[mir(cyc[a])], pos[mir(cyc[cc])]
        if b < dd:
            new = cyc[: a + 1] + [mir(cyc[l]) for l in range(b + 1, dd)] + cyc[cc:]
        else:
            new = cyc[: dd + 1] + [mir(cyc[l]) for l in range(cc + 1, k + 1)]
        for u, v in zip(new, new[1:] + new[:1]):
            if not d.has(u, v):
                raise PathError("cycle surgery produced a non-edge")
        if len(set(new)) != len(new):
            raise PathError("cycle surgery produced a repeated vertex")
        cyc = new
    raise PathError("cycle surgery did not terminate")


def _skew_pass(w: _Walker, t2: BinaryMatrix) -> None:
    n = w.m.n
    mir = lambda x: n - 1 - x  # noqa: E731
    d = DifferenceDigraph.of(w.m, t2)
    start = next(u for u in range(n) if d.out[u])
    path = [start]
    on = {start}
    while True:
        end = path[-1]
        succ = d.successors(end)
        nxt = next((u for u in succ if u not in on and mir(u) not in on), None)
        if nxt is None:
            break
        path.append(nxt)
        on.add(nxt)
    end = path[-1]
    succ = d.successors(end)
    back = next((u for u in succ if u in on), None)
    if back is not None:
        _reverse_cycle(w, path[path.index(back):], "SP3")  # cycle and its mirror
        return
    u = succ[0]
    seq = path[path.index(mir(u)):]  # i_1 .. i_q, then i_q -> mirror(i_1)
    i1, i2 = seq[0], seq[1]
    if len(seq) == 2 or w.bit(mir(i2), i1):
        w.do(Move("S4", (i1 + 1, i2 + 1)))
        if len(seq) > 2:
            _reverse_cycle(w, [*seq[1:], mir(i1)], "SP3")
    else:
        _reverse_cycle(w, [i1, *[mir(x) for x in seq[1:]]], "SP3")
        w.do(Move("S4", (i1 + 1, i2 + 1)))


def path_skew_hankel(t1: BinaryMatrix, t2: BinaryMatrix) -> MovePath:
    _check_same(t1, t2, C.SKEW_HANKEL)
    n = t1.n
    w = _Walker(t1, C.SKEW_HANKEL)
    if n % 2:
        c = n // 2
        for _ in range(_cap(n)):
            if w.m.rows[c] == t2.rows[c]:
                break
            d = DifferenceDigraph.of(w.m, t2)
            i1 = d.successors(c)[0]
            back = d.shortest_path(i1, c)
            cyc = _mirror_free_middle_cycle(d, [c, *back[:-1]])
            _reverse_cycle(w, cyc, "SP3")
        if w.m.rows[c] != t2.rows[c]:
            raise PathError("middle row did not converge")
    size = DifferenceDigraph.of(w.m, t2).edge_count()
    while size:
        _skew_pass(w, t2)
        new = DifferenceDigraph.of(w.m, t2).edge_count()
        if new >= size:
            raise PathError("skew-Hankel pass did not shrink the difference digraph")
        size = new
    return MovePath(t1, tuple(w.moves), C.SKEW_HANKEL)


_FINDERS = {
    C.PLAIN: path_plain,
    C.LOOPY: path_loopy,
    C.HANKEL: path_hankel,
    C.SKEW_HANKEL: path_skew_hankel,
}


def find_path(t1: BinaryMatrix, t2: BinaryMatrix, cls: TournamentClass, validate: bool = True) -> MovePath:
    """Path from t1 to t2 inside the class; with ``validate`` the path is replayed
    step by step before it is returned."""
    if cls not in _FINDERS:
        raise ValueError(f"no path finder for {cls.value}")
    path = _FINDERS[cls](t1, t2)
    if validate:
        *_, end = path.replay()
        if end != t2:
            raise PathError("path does not end at the target matrix")
    return path
