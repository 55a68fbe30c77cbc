"""Affine type A: the matrix crystal, its level-s KR subcrystal, bitableaux, gluing and promotion."""

from __future__ import annotations

from .crystal import Crystal
from .rsk import BiMatrix, ell, from_biword, inverse_rsk, kappa_se, rsk, to_biword
from .tableau import (LOWER, RAISE, Tableau, barred, check_dir, promotion, promotion_inverse,
                      rectify, rotated, signature_reduce, tableau_op, unbarred, word_epsilon,
                      word_op, word_phi)
from .weights import CartanType, fundamental_weight


def row_letters(r: int) -> tuple[int, ...]:
    return tuple(range(-r, 0))


def col_letters(n: int, r: int) -> tuple[int, ...]:
    return tuple(range(r + 1, n + 1))


def zero_matrix(n: int, r: int) -> BiMatrix:
    return BiMatrix.zero(row_letters(r), col_letters(n, r))


def make_matrix(rows, n: int, r: int) -> BiMatrix:
    return BiMatrix(row_letters(r), col_letters(n, r), tuple(tuple(x) for x in rows))


def _check(n: int, r: int, i: int) -> None:
    if not 1 <= r <= n - 1:
        raise ValueError("need 1 <= r <= n-1")
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} outside 0..{n - 1}")


def matrix_op(M: BiMatrix, i: int, direction: str, n: int, r: int):
    """Kashiwara operators on the ambient matrix crystal; None for zero."""
    _check(n, r, i)
    check_dir(direction)
    if i == r:
        return M.add(-r, r + 1, 1 if direction == LOWER else -1)
    if i == 0:
        return M.add(-1, n, 1 if direction == RAISE else -1)
    if i < r:
        a, b = to_biword(M)
        a2 = word_op(a, i, direction, barred(r))
        return None if a2 is None else from_biword(a2, b, M.row_letters, M.col_letters)
    Mt = M.transpose()
    c, d = to_biword(Mt)
    c2 = word_op(c, i, direction, unbarred(n, r))
    return None if c2 is None else from_biword(c2, d, Mt.row_letters, Mt.col_letters).transpose()


def matrix_weight(M: BiMatrix, n: int):
    """wt(M) = sum m_{i-bar j} (eps_j - eps_i), doubled coordinates."""
    c = [0] * n
    for p, a in enumerate(M.row_letters):
        for q, b in enumerate(M.col_letters):
            m = M.entries[p][q]
            c[b - 1] += 2 * m
            c[-a - 1] -= 2 * m
    return CartanType("A", n).weight(c)


class AmbientMatrixCrystal(Crystal):
    """The unbounded crystal on r x (n-r) matrices with its mixed structure functions.

    In direction 0 the structure functions are not string lengths: phi_0 is the
    south-east entry and eps_0 follows from the weight.
    """

    normal = False

    def __init__(self, n: int, r: int):
        _check(n, r, 0)
        self.n, self.r = n, r
        self.cartan = CartanType("A", n)
        self.index_set = self.cartan.index_set

    def e(self, M, i):
        return matrix_op(M, i, RAISE, self.n, self.r)

    def f(self, M, i):
        return matrix_op(M, i, LOWER, self.n, self.r)

    def weight(self, M):
        return matrix_weight(M, self.n)

    def key(self, M):
        return M.key()

    def epsilon(self, M, i):
        n, r = self.n, self.r
        if i == r:
            return M.get(-r, r + 1)
        if i == 0:
            return M.get(-1, n) - self.weight(M).pair(0)
        if i < r:
            return word_epsilon(to_biword(M)[0], i, barred(r))
        return word_epsilon(to_biword(M.transpose())[0], i, unbarred(n, r))

    def phi(self, M, i):
        n, r = self.n, self.r
        if i == 0:
            return M.get(-1, n)
        if i == r:
            return M.get(-r, r + 1) + self.weight(M).pair(r)
        if i < r:
            return word_phi(to_biword(M)[0], i, barred(r))
        return word_phi(to_biword(M.transpose())[0], i, unbarred(n, r))


class KRTypeA(Crystal):
    """B^{r,s} of A_{n-1}^{(1)}: matrices with ell(M) <= s, weight shifted by s*omega_r."""

    def __init__(self, n: int, r: int, s: int):
        _check(n, r, 0)
        if s < 1:
            raise ValueError("need s >= 1")
        self.n, self.r, self.s = n, r, s
        self.cartan = CartanType("A", n)
        self.index_set = self.cartan.index_set
        self.shift = fundamental_weight(self.cartan, r) * s

    def _cut(self, M):
        if M is None:
            return None
        return M if ell(M) <= self.s else None

    def e(self, M, i):
        y = matrix_op(M, i, RAISE, self.n, self.r)
        return self._cut(y) if i == 0 else y

    def f(self, M, i):
        y = matrix_op(M, i, LOWER, self.n, self.r)
        return self._cut(y) if i == self.r else y

    def weight(self, M):
        return matrix_weight(M, self.n) + self.shift

    def key(self, M):
        return M.key()

    def highest(self) -> BiMatrix:
        return zero_matrix(self.n, self.r)

    def seeds(self):
        return [self.highest()]


# ---------------------------------------------------------------- bitableaux

def _top_signs(cs, ct, r):
    out = []
    for s_col, t_col in zip(cs, ct):
        s, t = s_col[0], t_col[0]
        if s > -r and t > r + 1:
            out.append("+")
        elif s == -r and t == r + 1:
            out.append("-")
        else:
            out.append(".")
    return out


def bitableau_op_se(x, i: int, direction: str, n: int, r: int):
    """Operators on pairs (S, T) of anti-normal tableaux, i in I_0."""
    _check(n, r, i)
    check_dir(direction)
    S, T = x
    if S.shape != T.shape or S.offsets != T.offsets:
        raise ValueError("shape mismatch")
    if i == 0:
        raise ValueError("index 0 is not available on south-east bitableaux")
    if i < r:
        S2 = tableau_op(S, i, direction, barred(r))
        return None if S2 is None else (S2, T)
    if i > r:
        T2 = tableau_op(T, i, direction, unbarred(n, r))
        return None if T2 is None else (S, T2)
    cs, ct = S.corner_columns("se"), T.corner_columns("se")
    red = signature_reduce(_top_signs(cs, ct, r), padding="plus_right")
    if direction == RAISE:
        k = red.raise_position()
        if k is None:
            return None
        cs[k].pop(0)
        ct[k].pop(0)
    else:
        k = red.lower_position()
        if k == len(cs):
            cs.append([])
            ct.append([])
        cs[k].insert(0, -r)
        ct[k].insert(0, r + 1)
    return Tableau.from_columns(cs, "se"), Tableau.from_columns(ct, "se")


def bitableau_op_nw(x, i: int, direction: str, n: int, r: int):
    """Operators on pairs (S, T) of normal tableaux, i in I_r."""
    _check(n, r, i)
    check_dir(direction)
    S, T = x
    if S.shape != T.shape:
        raise ValueError("shape mismatch")
    if i == r:
        raise ValueError(f"index {r} is not available on north-west bitableaux")
    if 0 < i < r:
        S2 = tableau_op(S, i, direction, barred(r))
        return None if S2 is None else (S2, T)
    if i > r:
        T2 = tableau_op(T, i, direction, unbarred(n, r))
        return None if T2 is None else (S, T2)
    cs, ct = S.corner_columns("nw"), T.corner_columns("nw")
    cs.append([])
    ct.append([])
    signs = []
    for s_col, t_col in zip(cs, ct):
        if not s_col or (s_col[-1] < -1 and t_col[-1] < n):
            signs.append("-")
        elif s_col[-1] == -1 and t_col[-1] == n:
            signs.append("+")
        else:
            signs.append(".")
    # displayed as (..., sigma_2, sigma_1): the left-most column is last
    red = signature_reduce(signs[::-1])
    last = len(signs) - 1
    if direction == RAISE:
        k = last - red.raise_position()
        cs[k].append(-1)
        ct[k].append(n)
    else:
        p = red.lower_position()
        if p is None:
            return None
        k = last - p
        cs[k].pop()
        ct[k].pop()
    return Tableau.from_columns(cs, "nw"), Tableau.from_columns(ct, "nw")


def bitableau_weight(x, n: int):
    S, T = x
    c = [0] * n
    for a in S.entries():
        c[-a - 1] -= 2
    for b in T.entries():
        c[b - 1] += 2
    return CartanType("A", n).weight(c)


# ---------------------------------------------------------------- gluing

def glue_rectangle(M: BiMatrix, n: int, r: int, s: int, corner: str = "se") -> Tableau:
    """The rectangle tableau of shape (s^r) attached to a level-s matrix.

    ``se``: columnwise complement of P^se in [r] on top, Q^se below, over [n].
    ``nw``: Q^nw on top, columnwise complement of P^nw below, over [n]_{+r}
    (returned in the relabeled keys of :func:`krcrystal.tableau.rotated`).
    """
    full = set(range(1, r + 1))
    if corner == "se":
        S, T = kappa_se(M)
        cs, ct = S.columns(), T.columns()
        if len(cs) > s:
            raise ValueError(f"matrix has level {len(cs)} > {s}")
        pad = [[]] * (s - len(cs))
        cs, ct = pad + cs, pad + ct
        cols = [sorted(full - {-a for a in sc}) + tc for sc, tc in zip(cs, ct)]
        alphabet = unbarred(n)
    elif corner == "nw":
        S, T = rsk(M)
        cs, ct = S.columns(), T.columns()
        if len(cs) > s:
            raise ValueError(f"matrix has level {len(cs)} > {s}")
        pad = [[]] * (s - len(cs))
        cs, ct = cs + pad, ct + pad
        alphabet = rotated(n, r)
        cols = [[alphabet.encode(b) for b in tc] +
                [alphabet.encode(a) for a in sorted(full - {-a for a in sc})]
                for sc, tc in zip(cs, ct)]
    else:
        raise ValueError(f"unknown corner {corner!r}")
    U = Tableau.from_columns(cols, "nw")
    if U.shape != (s,) * r or not U.is_semistandard():
        raise ValueError("glued tableau is not a semistandard rectangle")
    return U


def unglue_rectangle(U: Tableau, n: int, r: int, corner: str = "se") -> BiMatrix:
    """Inverse of :func:`glue_rectangle`."""
    full = set(range(1, r + 1))
    cs, ct = [], []
    if corner == "se":
        for col in U.columns():
            top = {x for x in col if x <= r}
            cs.append(sorted(-a for a in full - top))
            ct.append([x for x in col if x > r])
        S = Tableau.from_columns(cs[::-1], "se")
        T = Tableau.from_columns(ct[::-1], "se")
        P, Q = rectify(S, "normal"), rectify(T, "normal")
    elif corner == "nw":
        alphabet = rotated(n, r)
        for col in U.columns():
            letters = [alphabet.decode(x) for x in col]
            ct.append([x for x in letters if x > r])
            cs.append(sorted(-a for a in full - {x for x in letters if x <= r}))
        P, Q = Tableau.from_columns(cs, "nw"), Tableau.from_columns(ct, "nw")
    else:
        raise ValueError(f"unknown corner {corner!r}")
    return inverse_rsk(P, Q, row_letters(r), col_letters(n, r))


def rotate_matrix_180(M: BiMatrix) -> BiMatrix:
    return M.rotate180()


# ---------------------------------------------------------------- promotion reference model

def rectangle_highest(n: int, r: int, s: int) -> Tableau:
    return Tableau(tuple((k,) * s for k in range(1, r + 1)))


def promotion_kr_op(U: Tableau, i: int, direction: str, n: int):
    """Classical operators for i != 0; e_0 = pr^{-1} e_1 pr (and likewise f_0)."""
    check_dir(direction)
    if U.rows and len(set(U.shape)) != 1:
        raise ValueError("promotion model needs a rectangular shape")
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} outside 0..{n - 1}")
    if i != 0:
        return tableau_op(U, i, direction, unbarred(n))
    V = tableau_op(promotion(U, n), 1, direction, unbarred(n))
    return None if V is None else promotion_inverse(V, n)


class PromotionKR(Crystal):
    """Reference model: SST_[n]((s^r)) with the affine operators obtained through promotion."""

    def __init__(self, n: int, r: int, s: int):
        self.n, self.r, self.s = n, r, s
        self.cartan = CartanType("A", n)
        self.index_set = self.cartan.index_set

    def e(self, U, i):
        return promotion_kr_op(U, i, RAISE, self.n)

    def f(self, U, i):
        return promotion_kr_op(U, i, LOWER, self.n)

    def weight(self, U):
        c = [0] * self.n
        for x in U.entries():
            c[x - 1] += 2
        return self.cartan.weight(c)

    def key(self, U):
        return U.key()

    def seeds(self):
        return [rectangle_highest(self.n, self.r, self.s)]
