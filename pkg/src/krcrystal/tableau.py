"""Tableaux over ordered alphabets, insertion, rectification and classical crystal operators.

Letters are stored as integer keys whose natural order is the alphabet order.
Unbarred letters are positive, a barred letter k-bar is stored as -k (so that
n-bar < ... < 1-bar is the integer order), and the rotated alphabet [n]_{+r} is
stored through the relabeling r+1 -> 1, ..., n -> n-r, 1 -> n-r+1, ..., r -> n.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

RAISE = "e"
LOWER = "f"


def check_dir(direction: str) -> None:
    if direction not in (RAISE, LOWER):
        raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")


# ---------------------------------------------------------------- alphabets

@dataclass(frozen=True)
class Alphabet:
    """``unbarred``: letters lo+1..n; ``barred``: n-bar..1-bar; ``rotated``: [n]_{+r}."""

    kind: str
    n: int
    lo: int = 0

    @property
    def letters(self) -> tuple[int, ...]:
        if self.kind == "unbarred":
            return tuple(range(self.lo + 1, self.n + 1))
        if self.kind == "barred":
            return tuple(range(-self.n, 0))
        return tuple(range(1, self.n + 1))

    @property
    def index_set(self) -> tuple[int, ...]:
        if self.kind == "unbarred":
            return tuple(range(self.lo + 1, self.n))
        if self.kind == "barred":
            return tuple(range(1, self.n))
        return tuple(i for i in range(self.n) if i != self.lo)

    def pair(self, i: int) -> tuple[int, int]:
        """Keys (a, b) with f_i a = b."""
        if i not in self.index_set:
            raise ValueError(f"index {i} not valid for {self}")
        if self.kind == "unbarred":
            return i, i + 1
        if self.kind == "barred":
            return -(i + 1), -i
        a = (i - self.lo - 1) % self.n + 1
        return a, a + 1

    def encode(self, letter: int) -> int:
        if self.kind == "rotated":
            return (letter - self.lo - 1) % self.n + 1
        return letter

    def decode(self, key: int) -> int:
        if self.kind == "rotated":
            return (key + self.lo - 1) % self.n + 1
        return key

    def label(self, key: int) -> str:
        x = self.decode(key)
        return f"{-x}b" if x < 0 else str(x)


def unbarred(n: int, lo: int = 0) -> Alphabet:
    return Alphabet("unbarred", n, lo)


def barred(n: int) -> Alphabet:
    return Alphabet("barred", n)


def rotated(n: int, r: int) -> Alphabet:
    return Alphabet("rotated", n, r)


# ---------------------------------------------------------------- partitions

def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    if not shape or shape[0] == 0:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def is_partition(shape: Sequence[int]) -> bool:
    return all(p > 0 for p in shape) and all(a >= b for a, b in zip(shape, shape[1:]))


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    def rec(k, cap):
        if k == 0:
            yield ()
            return
        for p in range(cap, -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(k - 1, p):
                    yield (p,) + rest
    yield from rec(rows, cols)


# ---------------------------------------------------------------- tableaux

@dataclass(frozen=True)
class Tableau:
    """A skew tableau given by its rows and the number of empty cells left of each row.

    Rows are normalized: empty rows at the top and bottom are dropped and the
    offsets are shifted so that the smallest one is zero.
    """

    rows: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...] = ()

    def __post_init__(self):
        rows = [tuple(r) for r in self.rows]
        offs = list(self.offsets) if self.offsets else [0] * len(rows)
        if len(offs) != len(rows):
            raise ValueError("offsets and rows differ in length")
        while rows and not rows[0]:
            rows.pop(0)
            offs.pop(0)
        while rows and not rows[-1]:
            rows.pop()
            offs.pop()
        if rows:
            m = min(o for o, r in zip(offs, rows) if r)
            offs = [max(o - m, 0) if r else 0 for o, r in zip(offs, rows)]
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "offsets", tuple(offs))

    # basic views
    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def __len__(self) -> int:
        return self.size()

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for i, (o, row) in enumerate(zip(self.offsets, self.rows)):
            for j, x in enumerate(row):
                yield i, o + j, x

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def width(self) -> int:
        return max((o + len(r) for o, r in zip(self.offsets, self.rows)), default=0)

    def columns(self) -> list[list[int]]:
        """Columns left to right, each read top to bottom."""
        cols: list[list[int]] = [[] for _ in range(self.width())]
        for _, j, x in self.cells():
            cols[j].append(x)
        return cols

    def is_normal(self) -> bool:
        return all(o == 0 for o in self.offsets) and is_partition(self.shape)

    def is_antinormal(self) -> bool:
        w = self.width()
        return all(o + len(r) == w for o, r in zip(self.offsets, self.rows)) and \
            all(a <= b for a, b in zip(self.shape, self.shape[1:])) and all(self.shape)

    def is_semistandard(self) -> bool:
        grid = {(i, j): x for i, j, x in self.cells()}
        for (i, j), x in grid.items():
            left = grid.get((i, j - 1))
            if left is not None and left > x:
                return False
            up = grid.get((i - 1, j))
            if up is not None and up >= x:
                return False
        return True

    # reading words
    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in reversed(row))

    def with_word(self, word: Sequence[int]) -> "Tableau":
        """Refill the same cells from a reading word."""
        out, k = [], 0
        for row in self.rows:
            m = len(row)
            out.append(tuple(reversed(word[k:k + m])))
            k += m
        if k != len(word):
            raise ValueError("word length does not match the shape")
        return Tableau(tuple(out), self.offsets)

    def map(self, fn) -> "Tableau":
        return Tableau(tuple(tuple(fn(x) for x in row) for row in self.rows), self.offsets)

    def rotate180(self) -> "Tableau":
        w = self.width()
        rows = tuple(tuple(reversed(r)) for r in reversed(self.rows))
        offs = tuple(w - o - len(r) for o, r in zip(reversed(self.offsets), reversed(self.rows)))
        return Tableau(rows, offs)

    # corner-oriented column access used by the signature rules
    def corner_columns(self, corner: str) -> list[list[int]]:
        """``se``: columns from the right; ``nw``: columns from the left (top to bottom)."""
        cols = self.columns()
        return cols[::-1] if corner == "se" else cols

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], corner: str) -> "Tableau":
        """Inverse of :meth:`corner_columns` for anti-normal (``se``) or normal (``nw``) shapes."""
        cols = [list(c) for c in cols]
        while cols and not cols[-1]:
            cols.pop()
        if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
            raise ValueError("column lengths do not form a partition shape")
        if corner == "nw":
            height = max((len(c) for c in cols), default=0)
            rows = [tuple(c[i] for c in cols if len(c) > i) for i in range(height)]
            return cls(tuple(rows))
        height = max((len(c) for c in cols), default=0)
        w = len(cols)
        rows, offs = [], []
        for i in range(height):
            depth = height - i  # cells exist in columns whose length >= depth
            row = []
            for k in range(w - 1, -1, -1):  # left to right
                c = cols[k]
                if len(c) >= depth:
                    row.append(c[len(c) - depth])
            rows.append(tuple(row))
            offs.append(w - len(row))
        return cls(tuple(rows), tuple(offs))

    def to_dict(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "offsets": list(self.offsets)}

    def key(self) -> str:
        body = "/".join(",".join(map(str, r)) for r in self.rows)
        if any(self.offsets):
            return f"{body}@{','.join(map(str, self.offsets))}"
        return body

    def pretty(self, alphabet: Alphabet | None = None) -> str:
        lab = alphabet.label if alphabet else (lambda x: f"{-x}b" if x < 0 else str(x))
        cells = [[lab(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        lines = []
        for o, r in zip(self.offsets, cells):
            lines.append(" ".join([" " * width] * o + [c.rjust(width) for c in r]))
        return "\n".join(lines)


EMPTY = Tableau(())


def normal_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))


def antinormal_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    rows = [tuple(r) for r in rows]
    w = max((len(r) for r in rows), default=0)
    return Tableau(tuple(rows), tuple(w - len(r) for r in rows))


# ---------------------------------------------------------------- insertion

def _insert_columns(cols: list[list[int]], a: int) -> None:
    for col in cols:
        k = bisect.bisect_left(col, a)
        if k == len(col):
            col.append(a)
            return
        col[k], a = a, col[k]
    cols.append([a])


def column_insert(S: Tableau, a: int) -> Tableau:
    """Schensted column insertion ``a -> S`` into a normal-shape tableau."""
    if S.rows and not S.is_normal():
        raise ValueError("column insertion needs a normal shape")
    cols = S.columns()
    _insert_columns(cols, a)
    return Tableau.from_columns(cols, "nw")


@lru_cache(maxsize=None)
def _p_columns(word: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    cols: list[list[int]] = []
    for a in word:
        _insert_columns(cols, a)
    return tuple(tuple(c) for c in cols)


def p_tableau(word: Sequence[int]) -> Tableau:
    """P(w) = (w_r -> (... (w_2 -> w_1)))."""
    return Tableau.from_columns(_p_columns(tuple(word)), "nw")


def knuth_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return _p_columns(tuple(u)) == _p_columns(tuple(v))


@lru_cache(maxsize=None)
def _antinormal_of_word(word: tuple[int, ...]) -> Tableau:
    # reverse, complement, insert, rotate, complement back
    dual = tuple(-x for x in reversed(word))
    return p_tableau(dual).rotate180().map(lambda x: -x)


def rectify(T: Tableau, corner: str = "normal") -> Tableau:
    """The normal (``normal``/``nw``) or anti-normal (``antinormal``/``se``) tableau Knuth-equivalent to T."""
    w = T.reading_word()
    if corner in ("normal", "nw"):
        return p_tableau(w)
    if corner in ("antinormal", "se"):
        return _antinormal_of_word(w)
    raise ValueError(f"unknown corner {corner!r}")


# ---------------------------------------------------------------- signature rule

@dataclass(frozen=True)
class Reduced:
    minus: tuple[int, ...]
    plus: tuple[int, ...]

    def raise_position(self):
        """Position of the right-most surviving minus, or None."""
        return self.minus[-1] if self.minus else None

    def lower_position(self):
        """Position of the left-most surviving plus, or None."""
        return self.plus[0] if self.plus else None


def signature_reduce(seq: Sequence[str], padding: str | None = None) -> Reduced:
    """Cancel (+,-) pairs separated only by dots until no - lies right of a +.

    ``padding='plus_right'`` adds an unbounded supply of + after the sequence
    (reported at position ``len(seq)``); ``padding='minus_left'`` adds
    unbounded - before it (reported at position ``-1``).
    """
    open_plus: list[int] = []
    minus: list[int] = []
    for k, s in enumerate(seq):
        if s == "+":
            open_plus.append(k)
        elif s == "-":
            if open_plus:
                open_plus.pop()
            else:
                minus.append(k)
        elif s not in (".", "·"):
            raise ValueError(f"bad signature symbol {s!r}")
    if padding == "plus_right":
        open_plus.append(len(seq))
    elif padding == "minus_left":
        minus.insert(0, -1)
    elif padding is not None:
        raise ValueError(f"unknown padding {padding!r}")
    return Reduced(tuple(minus), tuple(open_plus))


def _word_signature(word: Sequence[int], a: int, b: int) -> list[str]:
    return ["+" if x == a else "-" if x == b else "." for x in word]


def word_op(word: Sequence[int], i: int, direction: str, alphabet: Alphabet):
    """Kashiwara operator on a word (a tensor product of letters); None if zero."""
    check_dir(direction)
    a, b = alphabet.pair(i)
    red = signature_reduce(_word_signature(word, a, b))
    w = list(word)
    if direction == RAISE:
        k = red.raise_position()
        if k is None:
            return None
        w[k] = a
    else:
        k = red.lower_position()
        if k is None:
            return None
        w[k] = b
    return tuple(w)


def word_epsilon(word: Sequence[int], i: int, alphabet: Alphabet) -> int:
    a, b = alphabet.pair(i)
    return len(signature_reduce(_word_signature(word, a, b)).minus)


def word_phi(word: Sequence[int], i: int, alphabet: Alphabet) -> int:
    a, b = alphabet.pair(i)
    return len(signature_reduce(_word_signature(word, a, b)).plus)


def tableau_op(T: Tableau, i: int, direction: str, alphabet: Alphabet):
    w = word_op(T.reading_word(), i, direction, alphabet)
    return None if w is None else T.with_word(w)


# ---------------------------------------------------------------- counting

def hook_content(shape: Sequence[int], n: int) -> int:
    conj = conjugate(shape)
    num, den = 1, 1
    for i, row in enumerate(shape):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def enumerate_ssyt(lengths: Sequence[int], letters: Sequence[int],
                   offsets: Sequence[int] | None = None) -> Iterator[Tableau]:
    """Brute-force fillings of a skew shape by the given sorted letters."""
    offsets = list(offsets) if offsets else [0] * len(lengths)
    cells = [(i, offsets[i] + j) for i in range(len(lengths)) for j in range(lengths[i])]
    letters = sorted(letters)
    grid: dict[tuple[int, int], int] = {}

    def rec(k):
        if k == len(cells):
            rows = tuple(tuple(grid[(i, offsets[i] + j)] for j in range(lengths[i]))
                         for i in range(len(lengths)))
            yield Tableau(rows, tuple(offsets))
            return
        i, j = cells[k]
        lo_left = grid.get((i, j - 1))
        up = grid.get((i - 1, j))
        for x in letters:
            if lo_left is not None and x < lo_left:
                continue
            if up is not None and x <= up:
                continue
            grid[(i, j)] = x
            yield from rec(k + 1)
            del grid[(i, j)]

    yield from rec(0)


def count_ssyt(shape: Sequence[int], n: int, inner: Sequence[int] | None = None) -> int:
    """Number of SSYT over [n]; hook-content formula for normal shapes."""
    shape = tuple(p for p in shape if p)
    if not inner or not any(inner):
        return hook_content(shape, n) if shape else 1
    inner = list(inner) + [0] * (len(shape) - len(inner))
    lengths = [a - b for a, b in zip(shape, inner)]
    return sum(1 for _ in enumerate_ssyt(lengths, range(1, n + 1), inner))


# ---------------------------------------------------------------- evacuation and promotion

def content(T: Tableau, n: int) -> tuple[int, ...]:
    m = [0] * n
    for x in T.entries():
        m[x - 1] += 1
    return tuple(m)


def evacuation(T: Tableau, n: int) -> Tableau:
    """Rotate by 180 degrees, replace i by n+1-i, and rectify."""
    return rectify(T.rotate180().map(lambda x: n + 1 - x), "normal")


def _grid(T: Tableau) -> dict[tuple[int, int], int]:
    return {(i, j): x for i, j, x in T.cells()}


def _from_grid(grid: dict[tuple[int, int], int], shape: Sequence[int]) -> Tableau:
    return Tableau(tuple(tuple(grid[(i, j)] for j in range(row)) for i, row in enumerate(shape)))


def promotion(T: Tableau, n: int) -> Tableau:
    """Remove the letters n, slide the holes to the north-west corner, fill with 0, add 1."""
    if not T.is_normal():
        raise ValueError("promotion needs a normal shape")
    shape = T.shape
    grid = _grid(T)
    holes = sorted((c for c, x in grid.items() if x == n), key=lambda c: c[1])
    for c in holes:
        del grid[c]
    final = []
    for (i, j) in holes:
        while True:
            up, left = grid.get((i - 1, j)), grid.get((i, j - 1))
            if up is None and left is None:
                break
            if left is None or (up is not None and up >= left):
                grid[(i, j)] = up
                del grid[(i - 1, j)]
                i -= 1
            else:
                grid[(i, j)] = left
                del grid[(i, j - 1)]
                j -= 1
        final.append((i, j))
    for c in final:
        grid[c] = 0
    return _from_grid({c: x + 1 for c, x in grid.items()}, shape)


def promotion_inverse(T: Tableau, n: int) -> Tableau:
    """Remove the letters 1, slide the holes to the outer corners, fill with n+1, subtract 1."""
    if not T.is_normal():
        raise ValueError("promotion needs a normal shape")
    shape = T.shape
    cells = {(i, j) for i, row in enumerate(shape) for j in range(row)}
    grid = _grid(T)
    holes = sorted((c for c, x in grid.items() if x == 1), key=lambda c: -c[1])
    for c in holes:
        del grid[c]
    final = []
    for (i, j) in holes:
        while True:
            down = grid.get((i + 1, j)) if (i + 1, j) in cells else None
            right = grid.get((i, j + 1)) if (i, j + 1) in cells else None
            if down is None and right is None:
                break
            if right is None or (down is not None and down <= right):
                grid[(i, j)] = down
                del grid[(i + 1, j)]
                i += 1
            else:
                grid[(i, j)] = right
                del grid[(i, j + 1)]
                j += 1
        final.append((i, j))
    for c in final:
        grid[c] = n + 1
    return _from_grid({c: x - 1 for c, x in grid.items()}, shape)
