"""Switch calculus: 3-cycle, edge-loop and 4-cycle switches plus the Hankel
and skew-Hankel composite moves, each validated before it is applied.

Move kinds and their text form::

    T i j k      3-cycle switch reversing i->j->k->i
    EL i j       edge-loop switch (loop moves from j to i)
    Q i j k l    4-cycle switch reversing i->j->k->l->i
    HP3 i j k    T i j k, then its mirror T n+1-k n+1-j n+1-i
    H3M i        T i c n+1-i with c the middle index (odd n)
    H4 i j       Q i j n+1-j n+1-i
    SP3 i j k    T i j k, then its mirror T n+1-i n+1-j n+1-k
    S4 i j       Q i j n+1-i n+1-j
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import BinaryMatrix, TournamentClass, is_member, score_vector

C = TournamentClass

ARITY = {"T": 3, "EL": 2, "Q": 4, "HP3": 3, "H3M": 1, "H4": 2, "SP3": 3, "S4": 2}

# move vocabulary per class
VOCABULARY = {
    C.PLAIN: ("T",),
    C.LOOPY: ("T", "EL"),
    C.HANKEL: ("HP3", "H3M", "H4"),
    C.SKEW_HANKEL: ("SP3", "S4"),
}


class MoveError(ValueError):
    """The move's switch pattern is absent or its index constraints fail."""


@dataclass(frozen=True)
class Move:
    kind: str
    idx: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ARITY:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if len(self.idx) != ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {ARITY[self.kind]} indices")
        if len(set(self.idx)) != len(self.idx):
            raise ValueError(f"{self.kind} indices must be distinct")

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.idx)])

    @classmethod
    def parse(cls, line: str) -> "Move":
        parts = line.split()
        if not parts:
            raise ValueError("empty move line")
        try:
            idx = tuple(int(p) for p in parts[1:])
        except ValueError as exc:
            raise ValueError(f"bad move {line!r}") from exc
        return cls(parts[0].upper(), idx)

    def inverse(self, n: int) -> "Move":
        k, ix = self.kind, self.idx
        m = lambda a: n + 1 - a  # noqa: E731
        if k in ("T", "HP3", "SP3"):
            return Move(k, ix[::-1])
        if k == "EL":
            return Move(k, ix[::-1])
        if k == "Q":
            return Move(k, ix[::-1])
        if k == "H3M":
            return Move(k, (m(ix[0]),))
        if k == "H4":
            return Move(k, (m(ix[0]), m(ix[1])))
        if k == "S4":
            return Move(k, (ix[0], m(ix[1])))
        raise AssertionError(k)

    def relabel(self, f) -> "Move":
        return Move(self.kind, tuple(f(a) for a in self.idx))


def parse_moves(text: str) -> list[Move]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Move.parse(line))
    return out


def format_moves(moves: Iterable[Move]) -> str:
    return "".join(f"{mv}\n" for mv in moves)


# ---------------------------------------------------------------------------
# primitive switches (1-based indices)

def _check(m: BinaryMatrix, idx: Sequence[int]) -> list[int]:
    for a in idx:
        if not 1 <= a <= m.n:
            raise MoveError(f"index {a} outside 1..{m.n}")
    if len(set(idx)) != len(idx):
        raise MoveError("indices must be distinct")
    return [a - 1 for a in idx]


def has_cycle(m: BinaryMatrix, cyc: Sequence[int]) -> bool:
    """True when the 0-based vertices form a directed cycle in the given order
    with every reverse edge absent."""
    L = len(cyc)
    for a in range(L):
        u, v = cyc[a], cyc[(a + 1) % L]
        if not m.bit(u, v) or m.bit(v, u):
            return False
    return True


def _reverse_cycle(m: BinaryMatrix, cyc: Sequence[int]) -> BinaryMatrix:
    flips = []
    L = len(cyc)
    for a in range(L):
        u, v = cyc[a], cyc[(a + 1) % L]
        flips.append((u, v))
        flips.append((v, u))
    return m.with_bits(flips)


def apply_three_cycle(m: BinaryMatrix, i: int, j: int, k: int) -> BinaryMatrix:
    cyc = _check(m, (i, j, k))
    if not has_cycle(m, cyc):
        raise MoveError(f"no 3-cycle {i}->{j}->{k}->{i}")
    return _reverse_cycle(m, cyc)


def apply_four_cycle(m: BinaryMatrix, i: int, j: int, k: int, l: int) -> BinaryMatrix:
    cyc = _check(m, (i, j, k, l))
    if not has_cycle(m, cyc):
        raise MoveError(f"no 4-cycle {i}->{j}->{k}->{l}->{i}")
    return _reverse_cycle(m, cyc)


def apply_edge_loop(m: BinaryMatrix, i: int, j: int) -> BinaryMatrix:
    a, b = _check(m, (i, j))
    if m.bit(a, a) or not m.bit(a, b) or m.bit(b, a) or not m.bit(b, b):
        raise MoveError(f"no edge-loop pattern at ({i},{j})")
    return m.with_bits([(a, a), (a, b), (b, a), (b, b)])


# ---------------------------------------------------------------------------
# composite moves

def expand(mv: Move, n: int) -> list[tuple[int, ...]]:
    """Primitive cycles (1-based) a move reverses, in application order."""
    m = lambda a: n + 1 - a  # noqa: E731
    ix = mv.idx
    k = mv.kind
    if k in ("T", "Q"):
        return [ix]
    if k == "EL":
        return []
    if k == "HP3":
        i, j, kk = ix
        return [(i, j, kk), (m(kk), m(j), m(i))]
    if k == "SP3":
        i, j, kk = ix
        return [(i, j, kk), (m(i), m(j), m(kk))]
    if k == "H3M":
        if n % 2 == 0:
            raise MoveError("H3M needs odd order")
        c = (n + 1) // 2
        i = ix[0]
        if i == c:
            raise MoveError("H3M index must differ from the middle")
        return [(i, c, m(i))]
    if k == "H4":
        i, j = ix
        return [(i, j, m(j), m(i))]
    if k == "S4":
        i, j = ix
        return [(i, j, m(i), m(j))]
    raise AssertionError(k)


def _edges(cyc: Sequence[int]) -> set[frozenset[int]]:
    L = len(cyc)
    return {frozenset((cyc[a], cyc[(a + 1) % L])) for a in range(L)}


def check_move_shape(mv: Move, n: int) -> None:
    """Index-range and purity constraints that do not depend on the matrix."""
    for a in mv.idx:
        if not 1 <= a <= n:
            raise MoveError(f"index {a} outside 1..{n}")
    mirror = {n + 1 - a for a in mv.idx}
    if mv.kind in ("HP3", "SP3"):
        # pure: no index together with its mirror; the odd-order middle may appear
        own = set(mv.idx)
        shared = own & mirror
        c = (n + 1) // 2 if n % 2 else None
        if shared - ({c} if c else set()):
            raise MoveError(f"{mv} is not pure: it meets its mirror")
    elif mv.kind == "H4":
        i, j = mv.idx
        if len({i, j, n + 1 - i, n + 1 - j}) != 4:
            raise MoveError(f"{mv} needs four distinct indices")
    elif mv.kind == "S4":
        i, j = mv.idx
        if len({i, j, n + 1 - i, n + 1 - j}) != 4:
            raise MoveError(f"{mv} needs four distinct indices")
    if mv.kind in ("HP3", "SP3"):
        a, b = expand(mv, n)
        if _edges(a) & _edges(b):
            raise MoveError(f"{mv} halves overlap")


def apply_raw(m: BinaryMatrix, mv: Move) -> BinaryMatrix:
    """Apply a move's primitive switches with pattern checks but no class check."""
    if mv.kind == "EL":
        return apply_edge_loop(m, *mv.idx)
    check_move_shape(mv, m.n)
    out = m
    for cyc in expand(mv, m.n):
        if len(cyc) == 3:
            out = apply_three_cycle(out, *cyc)
        else:
            out = apply_four_cycle(out, *cyc)
    return out


def apply_move(m: BinaryMatrix, mv: Move, cls: TournamentClass) -> BinaryMatrix:
    """Apply a move and confirm the result stays in ``cls`` with the same scores."""
    allowed = VOCABULARY.get(cls)
    if allowed is not None and mv.kind not in allowed and mv.kind not in ("T", "Q"):
        raise MoveError(f"{mv.kind} moves are not defined for {cls.value} tournaments")
    out = apply_raw(m, mv)
    if not is_member(out, cls):
        raise MoveError(f"{mv} leaves the {cls.value} class")
    if score_vector(out) != score_vector(m):
        raise AssertionError("switch changed the score vector")
    return out


def replay(m: BinaryMatrix, moves: Iterable[Move], cls: TournamentClass) -> Iterator[BinaryMatrix]:
    """Yield each intermediate matrix; a failing step raises MoveError with its index."""
    cur = m
    for step, mv in enumerate(moves, start=1):
        try:
            cur = apply_move(cur, mv, cls)
        except MoveError as exc:
            raise MoveError(f"step {step} ({mv}): {exc}") from exc
        yield cur


# ---------------------------------------------------------------------------
# enumerating legal moves (used by the switch-graph oracle)

def legal_moves(m: BinaryMatrix, cls: TournamentClass) -> Iterator[Move]:
    """Every move of the class vocabulary whose pattern is present in ``m``."""
    n = m.n
    kinds = VOCABULARY[cls]
    if "T" in kinds or "HP3" in kinds or "SP3" in kinds:
        for i in range(n):
            out_i = m.rows[i]
            for j in range(n):
                if j == i or not (out_i >> j) & 1 or m.bit(j, i):
                    continue
                for k in range(n):
                    if k in (i, j) or not m.bit(j, k) or m.bit(k, j):
                        continue
                    if not m.bit(k, i) or m.bit(i, k):
                        continue
                    if i > j or i > k:
                        continue  # one rotation per cycle
                    tri = (i + 1, j + 1, k + 1)
                    for kind in ("T", "HP3", "SP3"):
                        if kind in kinds:
                            yield from _if_legal(m, Move(kind, tri), cls)
    if "EL" in kinds:
        for i in range(n):
            for j in range(n):
                if i != j and not m.bit(i, i) and m.bit(i, j) and m.bit(j, j):
                    yield Move("EL", (i + 1, j + 1))
    if "H3M" in kinds and n % 2:
        c = (n + 1) // 2
        for i in range(1, n + 1):
            if i != c:
                yield from _if_legal(m, Move("H3M", (i,)), cls)
    if "H4" in kinds or "S4" in kinds:
        kind = "H4" if "H4" in kinds else "S4"
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if len({i, j, n + 1 - i, n + 1 - j}) == 4:
                    yield from _if_legal(m, Move(kind, (i, j)), cls)


def _if_legal(m: BinaryMatrix, mv: Move, cls: TournamentClass) -> Iterator[Move]:
    try:
        apply_move(m, mv, cls)
    except MoveError:
        return
    yield mv
