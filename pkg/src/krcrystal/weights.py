"""Classical weights in doubled epsilon coordinates and their coroot pairings."""

from __future__ import annotations

from dataclasses import dataclass

FAMILIES = ("A", "Dtwisted", "C", "D")


@dataclass(frozen=True)
class CartanType:
    """Affine type tag.

    ``A`` is A_{n-1}^{(1)} with n coordinates, ``Dtwisted``/``C`` are the folded
    types D_{n+1}^{(2)} / C_n^{(1)} stored in folded coordinates, ``D`` is D_n^{(1)}.
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("rank parameter must be at least 2")

    @property
    def index_set(self) -> tuple[int, ...]:
        if self.family == "A":
            return tuple(range(self.n))
        return tuple(range(self.n + 1))

    @property
    def classical_index_set(self) -> tuple[int, ...]:
        return self.index_set[1:]

    @property
    def fold(self) -> int:
        """Fold multiplier: 1 for D_{n+1}^{(2)}, 2 for C_n^{(1)}, 1 otherwise."""
        return 2 if self.family == "C" else 1

    def weight(self, coords) -> "Weight":
        return Weight(tuple(int(c) for c in coords), self)

    def zero(self) -> "Weight":
        return self.weight((0,) * self.n)

    def unit(self, k: int, scale: int = 1) -> "Weight":
        """``scale * eps_k`` (1-based k) in doubled coordinates."""
        c = [0] * self.n
        c[k - 1] = 2 * scale
        return self.weight(c)

    def check_index(self, i: int) -> None:
        if i not in self.index_set:
            raise ValueError(f"index {i} outside {self.index_set}")

    def simple_root(self, i: int) -> "Weight":
        self.check_index(i)
        n = self.n
        c = [0] * n
        if self.family == "A":
            if i == 0:
                c[n - 1], c[0] = 2, -2
            else:
                c[i - 1], c[i] = 2, -2
        elif self.family in ("Dtwisted", "C"):
            e = self.fold
            if i == 0:
                c[0] = -2 * e
            elif i == n:
                c[n - 1] = 2 * e
            else:
                c[i - 1], c[i] = 2, -2
        else:
            if i == 0:
                c[0], c[1] = -2, -2
            elif i == n:
                c[n - 2], c[n - 1] = 2, 2
            else:
                c[i - 1], c[i] = 2, -2
        return self.weight(c)

    def pairing(self, w: "Weight", i: int) -> int:
        """<w, h_i>."""
        self.check_index(i)
        if w.cartan != self:
            raise ValueError("weight belongs to a different type")
        c, n = w.coords, self.n
        if self.family == "A":
            num, den = (c[n - 1] - c[0], 2) if i == 0 else (c[i - 1] - c[i], 2)
        elif self.family in ("Dtwisted", "C"):
            # the coroots for the two end nodes carry the factor 1/fold so that
            # the Cartan matrix has 2 on the diagonal
            e = self.fold
            if i == 0:
                num, den = -c[0], e
            elif i == n:
                num, den = c[n - 1], e
            else:
                num, den = c[i - 1] - c[i], 2
        else:
            if i == 0:
                num, den = -(c[0] + c[1]), 2
            elif i == n:
                num, den = c[n - 2] + c[n - 1], 2
            else:
                num, den = c[i - 1] - c[i], 2
        if num % den:
            raise ValueError(f"non-integral pairing of {w.coords} with h_{i}")
        return num // den


@dataclass(frozen=True)
class Weight:
    """A classical weight; ``coords[k]`` is twice the coefficient of eps_{k+1}."""

    coords: tuple[int, ...]
    cartan: CartanType

    def __post_init__(self):
        if len(self.coords) != self.cartan.n:
            raise ValueError("wrong number of coordinates")
        if self.coords and len({c % 2 for c in self.coords}) > 1:
            raise ValueError(f"mixed parity in {self.coords}")
        if self.cartan.family == "A" and self.coords:
            m = min(self.coords)
            if m:
                object.__setattr__(self, "coords", tuple(c - m for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        if other.cartan != self.cartan:
            raise ValueError("weights of different types")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.cartan)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.cartan)

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.cartan)

    __rmul__ = __mul__

    def pair(self, i: int) -> int:
        return self.cartan.pairing(self, i)

    def to_list(self) -> list[int]:
        return list(self.coords)


def fundamental_weight(cartan: CartanType, r: int) -> Weight:
    """omega_r for the classical part of ``cartan``."""
    n = cartan.n
    if cartan.family == "A":
        return cartan.weight([2 if k < r else 0 for k in range(n)])
    if cartan.family in ("Dtwisted", "C"):
        if r == n:
            return cartan.weight([1] * n) * cartan.fold
        return cartan.weight([2 if k < r else 0 for k in range(n)])
    if r == n:
        return cartan.weight([1] * n)
    if r == n - 1:
        return cartan.weight([1] * (n - 1) + [-1])
    return cartan.weight([2 if k < r else 0 for k in range(n)])
