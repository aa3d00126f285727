"""Matrix and score-vector types, transposes, class predicates and text I/O.

Indices are 1-based at every public entry point. Internally a matrix is a
tuple of ``n`` integers, bit ``j`` of row ``i`` holding the 0-based entry
``t[i][j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from operator import itemgetter
from typing import Iterable, Sequence

ScoreVector = tuple[int, ...]


class TournamentClass(Enum):
    PLAIN = "plain"
    LOOPY = "loopy"
    HANKEL = "hankel"
    SKEW_HANKEL = "skewhankel"
    HANKEL_LOOPY = "hankelloopy"
    SKEW_HANKEL_LOOPY = "skewhankelloopy"
    SKEW_HANKEL_DOUBLY_LOOPY = "skewhankeldoublyloopy"

    @classmethod
    def parse(cls, text: str) -> "TournamentClass":
        key = text.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown tournament class {text!r}")

    @property
    def is_reduction_only(self) -> bool:
        return self in REDUCTION_CLASSES


BASE_CLASSES = (
    TournamentClass.PLAIN,
    TournamentClass.LOOPY,
    TournamentClass.HANKEL,
    TournamentClass.SKEW_HANKEL,
)
REDUCTION_CLASSES = (
    TournamentClass.HANKEL_LOOPY,
    TournamentClass.SKEW_HANKEL_LOOPY,
    TournamentClass.SKEW_HANKEL_DOUBLY_LOOPY,
)


@dataclass(frozen=True)
class BinaryMatrix:
    """Square 0/1 matrix with bit-packed rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside the matrix")

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, n: int) -> "BinaryMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int] | str]) -> "BinaryMatrix":
        n = len(data)
        rows = []
        for line in data:
            cells = [int(c) for c in line]
            if len(cells) != n:
                raise ValueError("matrix is not square")
            if any(c not in (0, 1) for c in cells):
                raise ValueError("entries must be 0 or 1")
            rows.append(sum(1 << j for j, c in enumerate(cells) if c))
        return cls(n, tuple(rows))

    @classmethod
    def from_entries(cls, n: int, ones: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        """Matrix with 1s exactly at the given 0-based positions."""
        rows = [0] * n
        for i, j in ones:
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    # access -------------------------------------------------------------
    def bit(self, i: int, j: int) -> int:
        """0-based entry."""
        return (self.rows[i] >> j) & 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        self._check_index(i)
        self._check_index(j)
        return (self.rows[i - 1] >> (j - 1)) & 1

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def with_bits(self, flips: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        """Copy with the given 0-based entries complemented."""
        rows = list(self.rows)
        for i, j in flips:
            rows[i] ^= 1 << j
        return BinaryMatrix(self.n, tuple(rows))

    def to_text(self) -> str:
        return format_matrix(self)

    def __str__(self) -> str:
        return "\n".join(
            "".join("1" if (r >> j) & 1 else "0" for j in range(self.n)) for r in self.rows
        )


# ---------------------------------------------------------------------------
# score vectors

def as_scores(values: Iterable[int]) -> ScoreVector:
    out = tuple(int(v) for v in values)
    if any(v < 0 for v in out):
        raise ValueError("score entries must be nonnegative")
    return out


def score_vector(m: BinaryMatrix) -> ScoreVector:
    return tuple(r.bit_count() for r in m.rows)


def column_sums(m: BinaryMatrix) -> ScoreVector:
    return tuple(sum((r >> j) & 1 for r in m.rows) for j in range(m.n))


def losing_vector(r: Sequence[int], loopy: bool = False) -> ScoreVector:
    """Losses per player: n-1-r_i for tournaments, n-r_i for loopy ones."""
    n = len(r)
    top = n if loopy else n - 1
    return tuple(top - x for x in r)


# ---------------------------------------------------------------------------
# transposes and permutations

def _bit_strings(m: BinaryMatrix) -> list[str]:
    # character j of string i is t[i][j]
    return [format(r, f"0{m.n}b")[::-1] for r in m.rows]


def transpose(m: BinaryMatrix) -> BinaryMatrix:
    if m.n == 0:
        return m
    cols = ("".join(c) for c in zip(*_bit_strings(m)))
    return BinaryMatrix(m.n, tuple(int(c[::-1], 2) for c in cols))


def hankel_transpose(m: BinaryMatrix) -> BinaryMatrix:
    """Reflect across the anti-diagonal: result[i][j] = m[n+1-j][n+1-i]."""
    return transpose(rotate180(m))


def rotate180(m: BinaryMatrix) -> BinaryMatrix:
    n = m.n
    return BinaryMatrix(n, tuple(_reverse_bits(r, n) for r in reversed(m.rows)))


def reverse_columns(m: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(m.n, tuple(_reverse_bits(r, m.n) for r in m.rows))


def _reverse_bits(r: int, n: int) -> int:
    return int(format(r, f"0{n}b")[::-1], 2) if n else 0


def _check_permutation(p: Sequence[int], n: int) -> None:
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")


def permute(m: BinaryMatrix, p: Sequence[int]) -> BinaryMatrix:
    """Relabel vertex i as p(i): result[p(i)][p(j)] = m[i][j]."""
    n = m.n
    _check_permutation(p, n)
    if all(x == i for i, x in enumerate(p, start=1)):
        return m
    if n < 2:
        return m
    # column relabelling through bit strings keeps the inner loop in C
    src = itemgetter(*(x - 1 for x in invert_permutation(p)))
    rows = [0] * n
    for i, r in enumerate(m.rows):
        bits = format(r, f"0{n}b")[::-1]
        rows[p[i] - 1] = int("".join(src(bits))[::-1], 2)
    return BinaryMatrix(n, tuple(rows))


def permute_scores(r: Sequence[int], p: Sequence[int]) -> ScoreVector:
    out = [0] * len(r)
    for i, x in enumerate(r):
        out[p[i] - 1] = x
    return tuple(out)


def invert_permutation(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def submatrix(m: BinaryMatrix, keep: Sequence[int]) -> BinaryMatrix:
    """Principal submatrix on the given 0-based indices, in that order."""
    rows = []
    for i in keep:
        r = m.rows[i]
        rows.append(sum(((r >> j) & 1) << a for a, j in enumerate(keep)))
    return BinaryMatrix(len(keep), tuple(rows))


# ---------------------------------------------------------------------------
# class predicates

def _is_plain_off_diagonal(m: BinaryMatrix) -> bool:
    n = m.n
    t = transpose(m)
    full = (1 << n) - 1
    for i in range(n):
        if (m.rows[i] ^ t.rows[i]) | (1 << i) != full:
            return False
        if (m.rows[i] & t.rows[i]) & ~(1 << i):
            return False
    return True


def _diag(m: BinaryMatrix, i: int) -> int:
    return (m.rows[i] >> i) & 1


def _anti(m: BinaryMatrix, i: int) -> int:
    return (m.rows[i] >> (m.n - 1 - i)) & 1


def _skew_off_diagonals(m: BinaryMatrix) -> bool:
    """Tournament off both diagonals and invariant under 180-degree rotation."""
    n = m.n
    if rotate180(m) != m:
        return False
    t = transpose(m)
    full = (1 << n) - 1
    for i in range(n):
        diag = (1 << i) | (1 << (n - 1 - i))
        if (m.rows[i] | t.rows[i] | diag) != full or (m.rows[i] & t.rows[i]) & ~diag:
            return False
    return True


def is_member(m: BinaryMatrix, c: TournamentClass) -> bool:
    n = m.n
    C = TournamentClass
    if c is C.PLAIN:
        return all(_diag(m, i) == 0 for i in range(n)) and _is_plain_off_diagonal(m)
    if c is C.LOOPY:
        return _is_plain_off_diagonal(m)
    if c is C.HANKEL:
        return is_member(m, C.PLAIN) and hankel_transpose(m) == m
    if c is C.HANKEL_LOOPY:
        return _is_plain_off_diagonal(m) and hankel_transpose(m) == m
    if c is C.SKEW_HANKEL:
        return (
            all(_diag(m, i) == 0 and _anti(m, i) == 0 for i in range(n))
            and _skew_off_diagonals(m)
        )
    if c is C.SKEW_HANKEL_LOOPY or c is C.SKEW_HANKEL_DOUBLY_LOOPY:
        doubly = c is C.SKEW_HANKEL_DOUBLY_LOOPY
        for i in range(n):
            k = n - 1 - i
            if i == k:
                if _diag(m, i):
                    return False
                continue
            if _diag(m, i) + _diag(m, k) != 1:
                return False
            if doubly:
                if m.bit(i, k) + m.bit(k, i) != 1:
                    return False
            elif m.bit(i, k):
                return False
        # the off-diagonal identities are those of the unlooped class
        core_rows = []
        for i, r in enumerate(m.rows):
            core_rows.append(r & ~(1 << i) & ~(1 << (n - 1 - i)))
        return _skew_off_diagonals(BinaryMatrix(n, tuple(core_rows)))
    raise ValueError(f"unknown class {c}")


def member_classes(m: BinaryMatrix) -> list[TournamentClass]:
    return [c for c in TournamentClass if is_member(m, c)]


def require_member(m: BinaryMatrix, c: TournamentClass, what: str = "matrix") -> None:
    if not is_member(m, c):
        raise ValueError(f"{what} is not a {c.value} tournament")


def double_diagonal(n: int) -> BinaryMatrix:
    """D_n: 1s on the main and Hankel diagonals."""
    return BinaryMatrix(n, tuple((1 << i) | (1 << (n - 1 - i)) for i in range(n)))


def hankel_loopy_graph(m: BinaryMatrix) -> BinaryMatrix:
    """Hankel tournament with its columns taken last to first (a symmetric matrix)."""
    require_member(m, TournamentClass.HANKEL)
    return reverse_columns(m)


def collapse(m: BinaryMatrix, i: int) -> BinaryMatrix:
    """Move column i's 1s onto the diagonal of their rows, then delete row and column i."""
    require_member(m, TournamentClass.PLAIN)
    m._check_index(i)
    c = i - 1
    keep = [k for k in range(m.n) if k != c]
    rows = []
    for a, k in enumerate(keep):
        r = m.rows[k]
        out = sum(((r >> j) & 1) << b for b, j in enumerate(keep))
        if (r >> c) & 1:
            out |= 1 << a
        rows.append(out)
    return BinaryMatrix(m.n - 1, tuple(rows))


# ---------------------------------------------------------------------------
# text formats

def format_matrix(m: BinaryMatrix) -> str:
    body = str(m)
    return f"{m.n}\n{body}\n" if m.n else "0\n"


def parse_matrix(text: str) -> BinaryMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"bad order line {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != n:
        raise ValueError(f"expected {n} matrix rows, got {len(body)}")
    for ln in body:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row {ln!r}")
    return BinaryMatrix.from_lists(body)


def format_scores(r: Sequence[int]) -> str:
    return " ".join(str(x) for x in r)


def parse_scores(text: str) -> ScoreVector:
    try:
        return as_scores(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"bad score vector {text!r}") from exc
