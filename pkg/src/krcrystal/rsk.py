"""Matrices over two alphabets, their biwords, RSK, and the level statistic."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .tableau import Tableau, p_tableau, rectify


@dataclass(frozen=True)
class BiMatrix:
    """Non-negative integer matrix with rows and columns labeled by letter keys.

    Display convention: rows and columns are listed in alphabet order, so for
    row letters [r-bar] the top row is r-bar (key -r).
    """

    row_letters: tuple[int, ...]
    col_letters: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if list(self.row_letters) != sorted(self.row_letters) or \
                list(self.col_letters) != sorted(self.col_letters):
            raise ValueError("letters must be listed in increasing order")
        if len(self.entries) != len(self.row_letters) or \
                any(len(r) != len(self.col_letters) for r in self.entries):
            raise ValueError("entries do not match the alphabets")
        if any(x < 0 for r in self.entries for x in r):
            raise ValueError("entries must be non-negative")

    @classmethod
    def zero(cls, row_letters, col_letters) -> "BiMatrix":
        return cls(tuple(row_letters), tuple(col_letters),
                   tuple((0,) * len(col_letters) for _ in row_letters))

    def get(self, a: int, b: int) -> int:
        return self.entries[self.row_letters.index(a)][self.col_letters.index(b)]

    def add(self, a: int, b: int, k: int = 1):
        """M + k E_{ab}, or None if an entry would become negative."""
        p, q = self.row_letters.index(a), self.col_letters.index(b)
        if self.entries[p][q] + k < 0:
            return None
        rows = [list(r) for r in self.entries]
        rows[p][q] += k
        return BiMatrix(self.row_letters, self.col_letters, tuple(tuple(r) for r in rows))

    def total(self) -> int:
        return sum(map(sum, self.entries))

    def transpose(self) -> "BiMatrix":
        return BiMatrix(self.col_letters, self.row_letters, tuple(zip(*self.entries)) if self.entries
                        else ())

    def rotate180(self) -> "BiMatrix":
        return BiMatrix(self.row_letters, self.col_letters,
                        tuple(tuple(reversed(r)) for r in reversed(self.entries)))

    def key(self) -> str:
        return "[" + ";".join(",".join(map(str, r)) for r in self.entries) + "]"

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.entries)


def _biword_pairs(M: BiMatrix) -> list[tuple[int, int]]:
    pairs = []
    for p, a in enumerate(M.row_letters):
        for q, b in enumerate(M.col_letters):
            pairs.extend([(a, b)] * M.entries[p][q])
    # (a, b) < (c, d) iff b < d, or b = d and a > c
    pairs.sort(key=lambda ab: (ab[1], -ab[0]))
    return pairs


def to_biword(M: BiMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pairs = _biword_pairs(M)
    return tuple(a for a, _ in pairs), tuple(b for _, b in pairs)


def from_biword(a: Sequence[int], b: Sequence[int], row_letters, col_letters) -> BiMatrix:
    if len(a) != len(b):
        raise ValueError("biword rows differ in length")
    rows = {x: i for i, x in enumerate(row_letters)}
    cols = {x: j for j, x in enumerate(col_letters)}
    m = [[0] * len(col_letters) for _ in row_letters]
    for x, y in zip(a, b):
        m[rows[x]][cols[y]] += 1
    return BiMatrix(tuple(row_letters), tuple(col_letters), tuple(tuple(r) for r in m))


def is_sorted_biword(a: Sequence[int], b: Sequence[int]) -> bool:
    keys = [(y, -x) for x, y in zip(a, b)]
    return keys == sorted(keys)


def row_word(M: BiMatrix) -> tuple[int, ...]:
    """The a-word of M."""
    return to_biword(M)[0]


def column_word(M: BiMatrix) -> tuple[int, ...]:
    """The c-word: the top row of the biword of the transpose."""
    return to_biword(M.transpose())[0]


def rsk(M: BiMatrix) -> tuple[Tableau, Tableau]:
    return p_tableau(row_word(M)), p_tableau(column_word(M))


def kappa_nw(M: BiMatrix) -> tuple[Tableau, Tableau]:
    return rsk(M)


def kappa_se(M: BiMatrix) -> tuple[Tableau, Tableau]:
    P, Q = rsk(M)
    return rectify(P, "se"), rectify(Q, "se")


def inverse_rsk(P: Tableau, Q: Tableau, row_letters, col_letters) -> BiMatrix:
    """Undo :func:`rsk`.

    Q doubles as the recording tableau of the column insertion of the a-word,
    cells carrying equal labels having been created left to right; so the
    last cell is the right-most one holding the largest label of Q.
    """
    if P.shape != Q.shape:
        raise ValueError("P and Q have different shapes")
    cols = [list(c) for c in P.columns()]
    qcells = {(i, j): x for i, j, x in Q.cells()}
    a_word, b_word = [], []
    while qcells:
        top = max(qcells.values())
        i, j = max((c for c, x in qcells.items() if x == top), key=lambda c: c[1])
        del qcells[(i, j)]
        if len(cols[j]) != i + 1:
            raise ValueError("Q is not a valid recording tableau for P")
        x = cols[j].pop()
        if not cols[j]:
            cols.pop(j)
        for c in range(j - 1, -1, -1):
            col = cols[c]
            k = bisect.bisect_right(col, x) - 1
            col[k], x = x, col[k]
        a_word.append(x)
        b_word.append(top)
    return from_biword(a_word[::-1], b_word[::-1], row_letters, col_letters)


@lru_cache(maxsize=None)
def longest_weakly_decreasing(word: tuple[int, ...]) -> int:
    tails: list[int] = []
    for x in word:
        k = bisect.bisect_right(tails, -x)
        if k == len(tails):
            tails.append(-x)
        else:
            tails[k] = -x
    return len(tails)


def ell(M: BiMatrix) -> int:
    return longest_weakly_decreasing(row_word(M))


def ell_by_insertion(M: BiMatrix) -> int:
    P = p_tableau(row_word(M))
    return P.shape[0] if P.rows else 0


def matrices(row_letters, col_letters, max_total: int) -> Iterator[BiMatrix]:
    """All matrices with entry sum at most ``max_total``."""
    cells = len(row_letters) * len(col_letters)

    def rec(k, left):
        if k == cells:
            yield ()
            return
        for x in range(left + 1):
            for rest in rec(k + 1, left - x):
                yield (x,) + rest
    w = len(col_letters)
    for flat in rec(0, max_total):
        rows = tuple(flat[i * w:(i + 1) * w] for i in range(len(row_letters)))
        yield BiMatrix(tuple(row_letters), tuple(col_letters), rows)


def parse_matrix(text: str) -> list[list[int]]:
    rows = [list(map(int, line.split())) for line in text.strip().splitlines() if line.strip()]
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows
