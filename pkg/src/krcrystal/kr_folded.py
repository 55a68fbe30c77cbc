"""KR crystals B^{n,s} of types D_{n+1}^{(2)} (fold 1) and C_n^{(1)} (fold 2) on symmetric matrices.

A symmetric matrix is stored as its ambient n x n matrix for A_{2n-1}^{(1)} with
rows n-bar..1-bar and columns n+1..2n; in that display the symmetry is plain
transpose symmetry and the cells touched by f_n and e_0 are the two ends of
the diagonal.
"""

from __future__ import annotations

from .crystal import Crystal
from .kr_a import AmbientMatrixCrystal, matrix_op, matrix_weight
from .rsk import BiMatrix, ell, matrices, row_word
from .tableau import (LOWER, RAISE, Tableau, barred, check_dir, p_tableau, rectify,
                      signature_reduce, tableau_op)
from .weights import CartanType, fundamental_weight


def fold_family(fold: int) -> str:
    if fold not in (1, 2):
        raise ValueError("fold multiplier must be 1 or 2")
    return "Dtwisted" if fold == 1 else "C"


def sym_zero(n: int) -> BiMatrix:
    return BiMatrix.zero(tuple(range(-n, 0)), tuple(range(n + 1, 2 * n + 1)))


def sym_matrix(rows, n: int) -> BiMatrix:
    return BiMatrix(tuple(range(-n, 0)), tuple(range(n + 1, 2 * n + 1)), tuple(tuple(r) for r in rows))


def is_folded_element(M: BiMatrix, fold: int) -> bool:
    E = M.entries
    k = len(E)
    return all(E[p][q] == E[q][p] for p in range(k) for q in range(k)) and \
        all(E[p][p] % fold == 0 for p in range(k))


def symmetric_matrices(n: int, fold: int, max_total: int):
    """All symmetric matrices with diagonal divisible by ``fold`` and entry sum at most ``max_total``."""
    for M in matrices(tuple(range(-n, 0)), tuple(range(n + 1, 2 * n + 1)), max_total):
        if is_folded_element(M, fold):
            yield M


def folded_op(M: BiMatrix, i: int, direction: str, n: int, fold: int):
    """(x_i)^fold for i in {0, n}, x_i x_{2n-i} otherwise, on the ambient matrix crystal."""
    check_dir(direction)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    N = 2 * n
    steps = [i] * fold if i in (0, n) else [N - i, i]
    for j in steps:
        M = matrix_op(M, j, direction, N, n)
        if M is None:
            return None
    return M


def folded_weight(M: BiMatrix, n: int, fold: int):
    """Ambient weight in folded coordinates: eps-hat_k = eps_k - eps_{2n-k+1}."""
    C = matrix_weight(M, 2 * n).coords
    d = [(C[k] - C[2 * n - 1 - k]) // 2 for k in range(n)]
    return CartanType(fold_family(fold), n).weight(d)


class AmbientFoldedCrystal(Crystal):
    """Unbounded symmetric-matrix crystal with ambient structure functions.

    For i in {0, n} the ambient value is divided by the fold multiplier when
    ``divide`` is set; both normalizations are kept because either one is plausible.
    """

    normal = False

    def __init__(self, n: int, fold: int, divide: bool = True):
        self.n, self.fold, self.divide = n, fold, divide
        self.cartan = CartanType(fold_family(fold), n)
        self.index_set = self.cartan.index_set
        self.ambient = AmbientMatrixCrystal(2 * n, n)

    def e(self, M, i):
        return folded_op(M, i, RAISE, self.n, self.fold)

    def f(self, M, i):
        return folded_op(M, i, LOWER, self.n, self.fold)

    def weight(self, M):
        return folded_weight(M, self.n, self.fold)

    def key(self, M):
        return M.key()

    def epsilon(self, M, i):
        x = self.ambient.epsilon(M, i)
        if i in (0, self.n) and self.divide:
            return x / self.fold if x % self.fold else x // self.fold
        return x

    def phi(self, M, i):
        return self.epsilon(M, i) + self.weight(M).pair(i)


class KRFolded(Crystal):
    """B^{n,s}: symmetric matrices with ambient ell <= fold * s, weight shifted by s * omega-hat_n."""

    def __init__(self, n: int, s: int, fold: int):
        if n < 2 or s < 1:
            raise ValueError("need n >= 2 and s >= 1")
        self.n, self.s, self.fold = n, s, fold
        self.cartan = CartanType(fold_family(fold), n)
        self.index_set = self.cartan.index_set
        self.shift = fundamental_weight(self.cartan, n) * s

    def _cut(self, M):
        return M if M is not None and ell(M) <= self.fold * self.s else None

    def e(self, M, i):
        return self._cut(folded_op(M, i, RAISE, self.n, self.fold))

    def f(self, M, i):
        return self._cut(folded_op(M, i, LOWER, self.n, self.fold))

    def weight(self, M):
        return folded_weight(M, self.n, self.fold) + self.shift

    def key(self, M):
        return M.key()

    def highest(self):
        return sym_zero(self.n)

    def seeds(self):
        return [self.highest()]


# ---------------------------------------------------------------- single tableaux

def kappa_fold(M: BiMatrix, corner: str) -> Tableau:
    P = p_tableau(row_word(M))
    if corner == "nw":
        return P
    if corner == "se":
        return rectify(P, "se")
    raise ValueError(f"unknown corner {corner!r}")


def _groups(cols, fold):
    """Columns grouped in blocks of ``fold`` (pairs for the domino rules)."""
    if len(cols) % fold:
        raise ValueError("shape is not a multiple of the fold")
    return [cols[k:k + fold] for k in range(0, len(cols), fold)]


def fold_tableau_op_se(T: Tableau, i: int, direction: str, n: int, fold: int):
    """Operators for i in 1..n on anti-normal tableaux over [n-bar] of shape fold * lambda^pi."""
    check_dir(direction)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    if i < n:
        return tableau_op(T, i, direction, barred(n))
    groups = _groups(T.corner_columns("se"), fold) + [[[] for _ in range(fold)]]
    signs = []
    for g in groups:
        tops = [c[0] if c else None for c in g]
        if not g[0] or all(t is not None and t > -n for t in tops):
            signs.append("+")
        elif all(t == -n for t in tops):
            signs.append("-")
        else:
            signs.append(".")
    red = signature_reduce(signs)
    if direction == RAISE:
        k = red.raise_position()
        if k is None:
            return None
        for c in groups[k]:
            c.pop(0)
    else:
        k = red.lower_position()
        for c in groups[k]:
            c.insert(0, -n)
    return Tableau.from_columns([c for g in groups for c in g], "se")


def fold_tableau_op_nw(T: Tableau, i: int, direction: str, n: int, fold: int):
    """Operators for i in 0..n-1 on normal tableaux over [n-bar] of shape fold * lambda."""
    check_dir(direction)
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} outside 0..{n - 1}")
    if i > 0:
        return tableau_op(T, i, direction, barred(n))
    groups = _groups(T.corner_columns("nw"), fold) + [[[] for _ in range(fold)]]
    signs = []
    for g in groups:
        bottoms = [c[-1] if c else None for c in g]
        if not g[0] or all(b is not None and b < -1 for b in bottoms):
            signs.append("-")
        elif all(b == -1 for b in bottoms):
            signs.append("+")
        else:
            signs.append(".")
    red = signature_reduce(signs[::-1])
    last = len(signs) - 1
    if direction == RAISE:
        k = last - red.raise_position()
        for c in groups[k]:
            c.append(-1)
    else:
        p = red.lower_position()
        if p is None:
            return None
        for c in groups[last - p]:
            c.pop()
    return Tableau.from_columns([c for g in groups for c in g], "nw")
