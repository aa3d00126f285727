"""Brute-force ground truth at small orders.

Each class is described by identities between matrix entries: an entry is
fixed, equal to another entry, or equal to its complement. A union-find with
parity collapses those identities into orbits; the orbits not tied to a
constant are the free bits. Row sums and row bitmasks are affine in the free
bits, so whole blocks of the free-bit space are scored with one matrix
product.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .core import BinaryMatrix, ScoreVector, TournamentClass, as_scores, format_scores
from .switches import Move, MoveError, VOCABULARY, check_move_shape, expand

C = TournamentClass

MAX_ORDER = {
    C.PLAIN: 7,
    C.LOOPY: 6,
    C.HANKEL: 9,
    C.SKEW_HANKEL: 10,
    C.HANKEL_LOOPY: 8,
    C.SKEW_HANKEL_LOOPY: 9,
    C.SKEW_HANKEL_DOUBLY_LOOPY: 8,
}

_BLOCK = 1 << 16


class OracleRangeError(ValueError):
    """The requested order is outside the range the oracle enumerates."""


def check_range(n: int, cls: TournamentClass) -> None:
    if n < 0 or n > MAX_ORDER[cls]:
        raise OracleRangeError(f"{cls.value} oracle covers 0 <= n <= {MAX_ORDER[cls]}, got n={n}")


# ---------------------------------------------------------------------------
# orbit tables

class _ParityUF:
    """Union-find over entries plus a constant node; parity is relative to the root."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            p ^= self.parity[x]
            x = self.parent[x]
        root, acc = x, p
        for y in path:  # path compression
            nxt_acc = acc ^ self.parity[y]
            self.parent[y] = root
            self.parity[y] = acc
            acc = nxt_acc
        return root, p

    def union(self, a: int, b: int, rel: int) -> None:
        """Impose value(a) xor value(b) = rel."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if pa ^ pb != rel:
                raise ValueError("inconsistent class identities")
            return
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel


def _identities(n: int, cls: TournamentClass) -> Iterator[tuple[tuple[int, int], object, int]]:
    """Yield (entry, other, rel): other is an entry or None for the constant 0."""
    m = lambda a: n - 1 - a  # noqa: E731
    for i in range(n):
        for j in range(n):
            if cls in (C.PLAIN, C.LOOPY, C.HANKEL, C.HANKEL_LOOPY):
                if i == j:
                    if cls in (C.PLAIN, C.HANKEL):
                        yield (i, i), None, 0
                else:
                    yield (i, j), (j, i), 1
                if cls in (C.HANKEL, C.HANKEL_LOOPY):
                    yield (i, j), (m(j), m(i)), 0
                continue
            # skew family
            on_diag, on_anti = i == j, j == m(i)
            if not on_diag and not on_anti:
                yield (i, j), (j, i), 1
                yield (i, j), (m(i), m(j)), 0
            elif cls is C.SKEW_HANKEL or i == m(i):
                yield (i, j), None, 0
            elif on_diag:
                yield (i, i), (m(i), m(i)), 1
            elif cls is C.SKEW_HANKEL_LOOPY:
                yield (i, j), None, 0
            else:
                yield (i, j), (j, i), 1


@dataclass(frozen=True)
class OrbitTable:
    """Affine description of a class: entry (i,j) = const or free bit b xor parity."""

    n: int
    cls: TournamentClass
    free: int
    # per entry: -1 for a constant, otherwise the free bit index
    bit_of: tuple[tuple[int, ...], ...]
    value: tuple[tuple[int, ...], ...]  # constant value, or parity for free entries

    def score_affine(self) -> tuple[np.ndarray, np.ndarray]:
        """(base, coef) with scores = base + bits @ coef."""
        base = np.zeros(self.n, dtype=np.int64)
        coef = np.zeros((self.free, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in range(self.n):
                b, v = self.bit_of[i][j], self.value[i][j]
                if b < 0:
                    base[i] += v
                elif v:
                    base[i] += 1
                    coef[b, i] -= 1
                else:
                    coef[b, i] += 1
        return base, coef

    def row_affine(self) -> tuple[np.ndarray, np.ndarray]:
        """(base, coef) with row bitmasks = base + bits @ coef."""
        base = np.zeros(self.n, dtype=np.int64)
        coef = np.zeros((self.free, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in range(self.n):
                b, v = self.bit_of[i][j], self.value[i][j]
                w = 1 << j
                if b < 0:
                    base[i] += v * w
                elif v:
                    base[i] += w
                    coef[b, i] -= w
                else:
                    coef[b, i] += w
        return base, coef


@lru_cache(maxsize=None)
def orbit_table(n: int, cls: TournamentClass) -> OrbitTable:
    size = n * n
    const = size
    uf = _ParityUF(size + 1)
    for (i, j), other, rel in _identities(n, cls):
        a = i * n + j
        b = const if other is None else other[0] * n + other[1]
        uf.union(a, b, rel)
    const_root, const_par = uf.find(const)
    roots: dict[int, int] = {}
    bit_of = [[0] * n for _ in range(n)]
    value = [[0] * n for _ in range(n)]
    for a in range(size):  # row-major, so free bits are numbered by first entry
        root, par = uf.find(a)
        i, j = divmod(a, n)
        if root == const_root:
            bit_of[i][j] = -1
            value[i][j] = par ^ const_par
        else:
            if root not in roots:
                roots[root] = len(roots)
            bit_of[i][j] = roots[root]
            value[i][j] = par
    return OrbitTable(n, cls, len(roots), tuple(map(tuple, bit_of)), tuple(map(tuple, value)))


def free_bit_count(n: int, cls: TournamentClass) -> int:
    return orbit_table(n, cls).free


def _bits(words: np.ndarray, f: int) -> np.ndarray:
    # free bit 0 is the most significant bit of the word
    shifts = np.arange(f - 1, -1, -1, dtype=np.int64)
    return ((words[:, None] >> shifts[None, :]) & 1).astype(np.int64)


def _blocks(f: int) -> Iterator[np.ndarray]:
    total = 1 << f
    for lo in range(0, total, _BLOCK):
        yield np.arange(lo, min(total, lo + _BLOCK), dtype=np.int64)


def _scored_blocks(n: int, cls: TournamentClass) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    tab = orbit_table(n, cls)
    base, coef = tab.score_affine()
    for words in _blocks(tab.free):
        yield words, base[None, :] + _bits(words, tab.free) @ coef


# ---------------------------------------------------------------------------
# public operations

def enumerate_class(n: int, cls: TournamentClass, r: Sequence[int] | None = None) -> Iterator[BinaryMatrix]:
    """Every member of the class at order n (with score vector r if given),
    in increasing order of the free-bit word."""
    check_range(n, cls)
    if r is not None:
        r = as_scores(r)
        if len(r) != n:
            raise ValueError(f"score vector has length {len(r)}, expected {n}")
    tab = orbit_table(n, cls)
    rbase, rcoef = tab.row_affine()
    target = None if r is None else np.array(r, dtype=np.int64)
    for words, scores in _scored_blocks(n, cls):
        if target is not None:
            words = words[(scores == target[None, :]).all(axis=1)]
            if not len(words):
                continue
        rows = rbase[None, :] + _bits(words, tab.free) @ rcoef
        for row in rows.tolist():
            yield BinaryMatrix(n, tuple(row))


def members_by_score(n: int, cls: TournamentClass) -> dict[ScoreVector, list[BinaryMatrix]]:
    """All members grouped by score vector in one pass; each list is in
    enumeration order."""
    check_range(n, cls)
    tab = orbit_table(n, cls)
    rbase, rcoef = tab.row_affine()
    out: dict[ScoreVector, list[BinaryMatrix]] = {}
    for words, scores in _scored_blocks(n, cls):
        rows = rbase[None, :] + _bits(words, tab.free) @ rcoef
        for sc, row in zip(scores.tolist(), rows.tolist()):
            out.setdefault(tuple(sc), []).append(BinaryMatrix(n, tuple(row)))
    return out


def count_class(n: int, cls: TournamentClass, r: Sequence[int]) -> int:
    check_range(n, cls)
    target = np.array(as_scores(r), dtype=np.int64)
    return int(sum((s == target[None, :]).all(axis=1).sum() for _, s in _scored_blocks(n, cls)))


@dataclass(frozen=True)
class ClassCensus:
    n: int
    cls: TournamentClass
    by_score: dict[ScoreVector, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_score.values())

    def to_text(self) -> str:
        return "".join(f"{format_scores(r)} {c}\n" for r, c in sorted(self.by_score.items()))


def census(n: int, cls: TournamentClass) -> ClassCensus:
    check_range(n, cls)
    counts: Counter = Counter()
    for _, scores in _scored_blocks(n, cls):
        uniq, cnt = np.unique(scores, axis=0, return_counts=True)
        for row, c in zip(uniq.tolist(), cnt.tolist()):
            counts[tuple(row)] += c
    return ClassCensus(n, cls, dict(counts))


def feasibility_oracle(n: int, cls: TournamentClass) -> set[ScoreVector]:
    return set(census(n, cls).by_score)


# ---------------------------------------------------------------------------
# switch graphs

def _candidate_moves(n: int, cls: TournamentClass) -> list[Move]:
    kinds = VOCABULARY[cls]
    out: list[Move] = []
    for kind in kinds:
        if kind in ("T", "HP3", "SP3"):
            # a triangle and its rotations are one cycle; keep the rotation led by its minimum
            for tri in permutations(range(1, n + 1), 3):
                if tri[0] == min(tri):
                    out.append(Move(kind, tri))
        elif kind == "EL":
            out.extend(Move(kind, p) for p in permutations(range(1, n + 1), 2))
        elif kind == "H3M":
            if n % 2:
                c = (n + 1) // 2
                out.extend(Move(kind, (i,)) for i in range(1, n + 1) if i != c)
        else:  # H4, S4
            for i, j in permutations(range(1, n + 1), 2):
                if len({i, j, n + 1 - i, n + 1 - j}) == 4:
                    out.append(Move(kind, (i, j)))
    valid = []
    for mv in out:
        try:
            check_move_shape(mv, n)
        except MoveError:
            continue
        valid.append(mv)
    return valid


@dataclass(frozen=True)
class _Pattern:
    move: Move
    need_one: tuple[int, ...]   # per-row mask of entries that must be 1
    need_zero: tuple[int, ...]  # per-row mask of entries that must be 0
    flip: tuple[int, ...]       # per-row xor mask


def _pattern(mv: Move, n: int) -> _Pattern:
    one = [0] * n
    zero = [0] * n
    if mv.kind == "EL":
        a, b = (x - 1 for x in mv.idx)
        zero[a] |= 1 << a
        one[a] |= 1 << b
        zero[b] |= 1 << a
        one[b] |= 1 << b
    else:
        for cyc in expand(mv, n):
            L = len(cyc)
            for t in range(L):
                u, v = cyc[t] - 1, cyc[(t + 1) % L] - 1
                one[u] |= 1 << v
                zero[v] |= 1 << u
    flip = [one[i] | zero[i] for i in range(n)]
    return _Pattern(mv, tuple(one), tuple(zero), tuple(flip))


@lru_cache(maxsize=None)
def _patterns(n: int, cls: TournamentClass) -> tuple[_Pattern, ...]:
    return tuple(_pattern(mv, n) for mv in _candidate_moves(n, cls))


def neighbours(m: BinaryMatrix, cls: TournamentClass) -> Iterator[tuple[Move, BinaryMatrix]]:
    """Matrices one move away whose switch pattern is present; class membership
    of the result is left to the caller."""
    rows = m.rows
    for p in _patterns(m.n, cls):
        if all((rows[i] & p.need_one[i]) == p.need_one[i] and not rows[i] & p.need_zero[i]
               for i in range(m.n) if p.flip[i]):
            yield p.move, BinaryMatrix(m.n, tuple(r ^ f for r, f in zip(rows, p.flip)))


@dataclass(frozen=True)
class SwitchGraphReport:
    score: ScoreVector
    cls: TournamentClass
    vertices: int
    edges: int
    components: int
    diameter: int | None  # None when disconnected or not requested

    @property
    def connected(self) -> bool:
        return self.components <= 1

    def summary(self) -> str:
        word = "connected" if self.connected else "disconnected"
        diam = "-" if self.diameter is None else str(self.diameter)
        return (f"{self.cls.value} {format_scores(self.score)}: {word}; vertices={self.vertices} "
                f"edges={self.edges} components={self.components} diameter={diam}")


def switch_graph(r: Sequence[int], cls: TournamentClass, with_diameter: bool = True,
                 members: Sequence[BinaryMatrix] | None = None) -> SwitchGraphReport:
    """Switch graph of the class members with score vector r under the class's
    move vocabulary. ``members`` may be passed when the caller already has them."""
    r = as_scores(r)
    n = len(r)
    if cls not in VOCABULARY:
        raise ValueError(f"no move vocabulary for {cls.value}")
    if members is None:
        members = list(enumerate_class(n, cls, r))
    index = {m.rows: k for k, m in enumerate(members)}
    src, dst = [], []
    for k, m in enumerate(members):
        for _, nb in neighbours(m, cls):
            t = index.get(nb.rows)
            if t is not None:  # outside the member set means the move left the class
                src.append(k)
                dst.append(t)
    size = len(members)
    g = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size))
    comps = connected_components(g, directed=False)[0] if size else 0
    diameter = None
    if with_diameter and comps == 1:
        dist = shortest_path(g, method="D", unweighted=True, directed=False)
        diameter = int(dist.max())
    edges = int((g + g.T).nnz // 2) if size else 0
    return SwitchGraphReport(r, cls, size, edges, int(comps), diameter)


def switch_graph_connected(r: Sequence[int], cls: TournamentClass) -> tuple[bool, int | None]:
    rep = switch_graph(r, cls)
    return rep.connected, rep.diameter
