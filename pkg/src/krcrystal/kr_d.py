"""KR crystals B^{n,s} and B^{n-1,s} of type D_n^{(1)} on Knuth classes of barred tableaux.

A class is stored by its normal-shape representative. The even class has
columns of even length (B^{n,s}); the odd class has exactly s columns of odd
length (B^{n-1,s}). The spin-vector model below is the independent oracle.
"""

from __future__ import annotations

from .crystal import Crystal, SpinCrystal, TensorCrystal
from .tableau import (EMPTY, LOWER, RAISE, Tableau, barred, check_dir, normal_tableau, rectify,
                      signature_reduce, tableau_op)
from .weights import CartanType

EVEN, ODD = 1, -1


def _check_parity(parity: int) -> None:
    if parity not in (EVEN, ODD):
        raise ValueError("parity must be 1 (even columns) or -1 (odd columns)")


def column_parity_ok(T: Tableau, parity: int) -> bool:
    want = 0 if parity == EVEN else 1
    return all(len(c) % 2 == want for c in T.columns())


def d_tableau_op_se(T: Tableau, i: int, direction: str, n: int, empty_sign: str = "+"):
    """Operators for i in 1..n on anti-normal tableaux over [n-bar].

    For i = n the columns are read from the right by their top entries and a
    vertical domino (n-bar over (n-1)-bar) is added or removed.
    """
    check_dir(direction)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    if i < n:
        return tableau_op(T, i, direction, barred(n))
    cols = T.corner_columns("se") + [[]]
    signs = []
    for c in cols:
        if not c:
            signs.append(empty_sign)
        elif c[0] > -(n - 1):
            signs.append("+")
        elif -n in c and -(n - 1) in c:
            signs.append("-")
        else:
            signs.append(".")
    red = signature_reduce(signs)
    if direction == RAISE:
        k = red.raise_position()
        if k is None:
            return None
        del cols[k][:2]
    else:
        k = red.lower_position()
        if k is None:
            return None
        cols[k][:0] = [-n, -(n - 1)]
    return Tableau.from_columns(cols, "se")


def d_tableau_op_nw(T: Tableau, i: int, direction: str, n: int, empty_sign: str = "-",
                    enumerate_from: str = "left"):
    """Operators for i in 0..n-1 on normal tableaux over [n-bar].

    For i = 0 the columns are read by their bottom entries and a vertical
    domino (2-bar over 1-bar) is added or removed. ``enumerate_from`` says how
    columns are numbered before the sign sequence is displayed as
    (..., s_2, s_1); only "left" agrees with the spin oracle.
    """
    check_dir(direction)
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} outside 0..{n - 1}")
    if i > 0:
        return tableau_op(T, i, direction, barred(n))
    cols = T.corner_columns("nw") + [[]]
    signs = []
    for c in cols:
        if not c:
            signs.append(empty_sign)
        elif c[-1] < -2:
            signs.append("-")
        elif -2 in c and -1 in c:
            signs.append("+")
        else:
            signs.append(".")
    if enumerate_from == "left":
        order = list(range(len(cols)))[::-1]
    elif enumerate_from == "right":
        order = list(range(len(cols)))
    else:
        raise ValueError(f"unknown enumeration {enumerate_from!r}")
    red = signature_reduce([signs[k] for k in order])
    if direction == RAISE:
        p = red.raise_position()
        if p is None:
            return None
        cols[order[p]].extend([-2, -1])
    else:
        p = red.lower_position()
        if p is None:
            return None
        del cols[order[p]][-2:]
    return Tableau.from_columns(cols, "nw")


class KRTypeD(Crystal):
    """B^{n,s} (parity 1) or B^{n-1,s} (parity -1) of type D_n^{(1)} on normal representatives."""

    def __init__(self, n: int, s: int, parity: int = EVEN, enumerate_from: str = "left"):
        _check_parity(parity)
        if n < 4 or s < 1:
            raise ValueError("need n >= 4 and s >= 1")
        self.n, self.s, self.parity = n, s, parity
        self.enumerate_from = enumerate_from
        self.cartan = CartanType("D", n)
        self.index_set = self.cartan.index_set
        self._se_empty = "+" if parity == EVEN else "·"
        self._nw_empty = "-" if parity == EVEN else "·"

    def _level_ok(self, T: Tableau) -> bool:
        w = T.width()
        return w == self.s if self.parity == ODD else w <= self.s

    def is_member(self, T: Tableau) -> bool:
        return (T.is_normal() and T.is_semistandard() and self._level_ok(T)
                and column_parity_ok(T, self.parity) and all(-self.n <= x <= -1 for x in T.entries()))

    def _op(self, T, i, direction):
        self.check_index(i)
        n = self.n
        if i == n:
            A = d_tableau_op_se(rectify(T, "se"), n, direction, n, self._se_empty)
            out = None if A is None else rectify(A, "normal")
        elif i == 0:
            out = d_tableau_op_nw(T, 0, direction, n, self._nw_empty, self.enumerate_from)
        else:
            out = tableau_op(T, i, direction, barred(n))
        return out if out is not None and self._level_ok(out) else None

    def e(self, T, i):
        return self._op(T, i, RAISE)

    def f(self, T, i):
        return self._op(T, i, LOWER)

    def weight(self, T):
        counts = [0] * self.n
        for x in T.entries():
            counts[-x - 1] += 1
        return self.cartan.weight([self.s - 2 * m for m in counts])

    def key(self, T):
        return T.key()

    def highest(self) -> Tableau:
        if self.parity == EVEN:
            return EMPTY
        return normal_tableau([[-self.n] * self.s])

    def seeds(self):
        return [self.highest()]


# ---------------------------------------------------------------- spin oracle

def spin_map(column, n: int) -> tuple[int, ...]:
    """Single column to a spin vector: entry k is -1 iff k-bar occurs."""
    if isinstance(column, Tableau):
        cols = column.columns()
        if len(cols) > 1:
            raise ValueError("spin_map takes a single column")
        column = cols[0] if cols else []
    present = set(column)
    return tuple(-1 if -k in present else 1 for k in range(1, n + 1))


def column_split_embed(T: Tableau, s: int, corner: str) -> list[list[int]]:
    """Columns T^1, ..., T^s read from the right inside an s-wide box.

    ``T`` is anti-normal (box right-aligned) for "se" and normal (left-aligned)
    for "nw"; missing columns are empty.
    """
    if T.width() > s:
        raise ValueError("tableau wider than the level")
    pad = [[] for _ in range(s - T.width())]
    if corner == "se":
        return T.corner_columns("se") + pad
    if corner == "nw":
        return (T.corner_columns("nw") + pad)[::-1]
    raise ValueError(f"unknown corner {corner!r}")


def spin_tensor(n: int, s: int, parity: int, index_set) -> Crystal:
    factors = [SpinCrystal(n, parity, index_set) for _ in range(s)]
    return factors[0] if s == 1 else TensorCrystal.of(*factors)


def nest(items):
    """(v1, ..., vs) as the right-nested pairs used by TensorCrystal."""
    out = items[-1]
    for v in reversed(items[:-1]):
        out = (v, out)
    return out


def unnest(x, s: int):
    items = []
    for _ in range(s - 1):
        items.append(x[0])
        x = x[1]
    items.append(x)
    return items


def spin_image(T: Tableau, n: int, s: int, corner: str):
    """iota_s followed by rho on each factor, for a normal representative T."""
    rep = rectify(T, "se") if corner == "se" else T
    return nest([spin_map(c, n) for c in column_split_embed(rep, s, corner)])


def oracle_index_set(n: int, corner: str) -> tuple[int, ...]:
    """I_0 for the SE side, I_n for the NW side."""
    return tuple(range(1, n + 1)) if corner == "se" else tuple(range(0, n))
