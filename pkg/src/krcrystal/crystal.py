"""Abstract crystals and the generic constructions: letters, words, tensor products, duals, T_Lambda."""

from __future__ import annotations

import json
from typing import Any, Sequence

from .tableau import RAISE, LOWER, Alphabet, check_dir, word_epsilon, word_op, word_phi
from .weights import CartanType, Weight

NEG_INF = float("-inf")


class Crystal:
    """Base class for crystal models.

    Subclasses implement ``e``, ``f``, ``weight`` and ``key``.  When ``normal``
    is true the structure functions are string lengths, which is what the
    default ``epsilon``/``phi`` compute; models with other structure functions
    override them and set ``normal = False``.
    """

    cartan: CartanType
    index_set: tuple[int, ...]
    normal = True
    string_cap = 10_000

    def e(self, b, i: int):
        raise NotImplementedError

    def f(self, b, i: int):
        raise NotImplementedError

    def weight(self, b) -> Weight:
        raise NotImplementedError

    def key(self, b) -> str:
        return json.dumps(b, separators=(",", ":"), default=str)

    def op(self, b, i: int, direction: str):
        check_dir(direction)
        return self.e(b, i) if direction == RAISE else self.f(b, i)

    def _string(self, b, i, step):
        k = 0
        while True:
            b = step(b, i)
            if b is None:
                return k
            k += 1
            if k > self.string_cap:
                raise RuntimeError("string longer than the cap; is the model normal?")

    def epsilon(self, b, i: int):
        return self._string(b, i, self.e)

    def phi(self, b, i: int):
        return self._string(b, i, self.f)

    def check_index(self, i: int) -> None:
        if i not in self.index_set:
            raise ValueError(f"index {i} not in {self.index_set}")


class WordCrystal(Crystal):
    """Words over an alphabet, identified with tensor products of letters."""

    def __init__(self, alphabet: Alphabet, cartan: CartanType | None = None):
        self.alphabet = alphabet
        self.cartan = cartan or CartanType("A", alphabet.n)
        self.index_set = alphabet.index_set

    def e(self, b, i):
        return word_op(b, i, RAISE, self.alphabet)

    def f(self, b, i):
        return word_op(b, i, LOWER, self.alphabet)

    def epsilon(self, b, i):
        return word_epsilon(b, i, self.alphabet)

    def phi(self, b, i):
        return word_phi(b, i, self.alphabet)

    def weight(self, b):
        c = [0] * self.cartan.n
        for x in b:
            x = self.alphabet.decode(x)
            c[abs(x) - 1] += 2 if x > 0 else -2
        return self.cartan.weight(c)

    def key(self, b):
        return ",".join(map(str, b))


class LetterCrystal(WordCrystal):
    """The single-letter crystal [n] or its dual [n-bar]; elements are letter keys."""

    def e(self, b, i):
        w = word_op((b,), i, RAISE, self.alphabet)
        return None if w is None else w[0]

    def f(self, b, i):
        w = word_op((b,), i, LOWER, self.alphabet)
        return None if w is None else w[0]

    def epsilon(self, b, i):
        return word_epsilon((b,), i, self.alphabet)

    def phi(self, b, i):
        return word_phi((b,), i, self.alphabet)

    def weight(self, b):
        return super().weight((b,))

    def key(self, b):
        return str(b)

    def elements(self):
        return list(self.alphabet.letters)


class TLambda(Crystal):
    """The one-element crystal {t_Lambda} with eps = phi = -inf."""

    normal = False

    def __init__(self, weight: Weight, index_set: Sequence[int] | None = None):
        self.cartan = weight.cartan
        self.index_set = tuple(index_set) if index_set is not None else weight.cartan.index_set
        self.lam = weight
        self.element = ("t", weight.coords)

    def e(self, b, i):
        return None

    def f(self, b, i):
        return None

    def epsilon(self, b, i):
        return NEG_INF

    def phi(self, b, i):
        return NEG_INF

    def weight(self, b):
        return self.lam

    def key(self, b):
        return "t" + json.dumps(list(self.lam.coords), separators=(",", ":"))


class TensorCrystal(Crystal):
    """B1 (x) B2 with the rule: e acts on b1 iff phi(b1) >= eps(b2), f iff phi(b1) > eps(b2).

    Elements are pairs ``(b1, b2)``; several factors nest to the right.
    """

    def __init__(self, left: Crystal, right: Crystal):
        if left.cartan != right.cartan:
            raise ValueError("factors of different types")
        self.left, self.right = left, right
        self.cartan = left.cartan
        self.index_set = tuple(i for i in left.index_set if i in right.index_set)
        self.normal = False

    @classmethod
    def of(cls, *factors: Crystal) -> "TensorCrystal":
        if len(factors) < 2:
            raise ValueError("need at least two factors")
        out = factors[-1]
        for c in reversed(factors[:-1]):
            out = cls(c, out)
        return out

    def epsilon(self, b, i):
        b1, b2 = b
        return max(self.left.epsilon(b1, i),
                   self.right.epsilon(b2, i) - self.left.weight(b1).pair(i))

    def phi(self, b, i):
        b1, b2 = b
        return max(self.left.phi(b1, i) + self.right.weight(b2).pair(i),
                   self.right.phi(b2, i))

    def e(self, b, i):
        b1, b2 = b
        if self.left.phi(b1, i) >= self.right.epsilon(b2, i):
            x = self.left.e(b1, i)
            return None if x is None else (x, b2)
        x = self.right.e(b2, i)
        return None if x is None else (b1, x)

    def f(self, b, i):
        b1, b2 = b
        if self.left.phi(b1, i) > self.right.epsilon(b2, i):
            x = self.left.f(b1, i)
            return None if x is None else (x, b2)
        x = self.right.f(b2, i)
        return None if x is None else (b1, x)

    def weight(self, b):
        return self.left.weight(b[0]) + self.right.weight(b[1])

    def key(self, b):
        return f"({self.left.key(b[0])})x({self.right.key(b[1])})"


class DualCrystal(Crystal):
    """B^vee: negated weights, eps and phi swapped, e and f swapped."""

    def __init__(self, base: Crystal):
        self.base = base
        self.cartan = base.cartan
        self.index_set = base.index_set
        self.normal = base.normal

    def e(self, b, i):
        return self.base.f(b, i)

    def f(self, b, i):
        return self.base.e(b, i)

    def epsilon(self, b, i):
        return self.base.phi(b, i)

    def phi(self, b, i):
        return self.base.epsilon(b, i)

    def weight(self, b):
        return -self.base.weight(b)

    def key(self, b):
        return "dual:" + self.base.key(b)


class SpinCrystal(Crystal):
    """Spin vectors (i_1, ..., i_n), i_k = +-1, for D_n^{(1)} with weight (1/2) sum i_k eps_k.

    Classical operators follow the spin table; direction 0 uses the table of
    B(-omega'_0): e_0 flips (1, 1) to (-1, -1) in the first two positions.
    ``parity`` +1 keeps vectors with an even number of -1, -1 an odd number.
    """

    def __init__(self, n: int, parity: int = 1, index_set: Sequence[int] | None = None):
        self.n = n
        self.parity = parity
        self.cartan = CartanType("D", n)
        self.index_set = tuple(index_set) if index_set is not None else self.cartan.index_set

    def _positions(self, i):
        n = self.n
        if i == 0:
            return 0, 1, (1, 1), (-1, -1)
        if i == n:
            return n - 2, n - 1, (-1, -1), (1, 1)
        return i - 1, i, (-1, 1), (1, -1)

    def e(self, v, i):
        self.check_index(i)
        p, q, src, dst = self._positions(i)
        if (v[p], v[q]) != src:
            return None
        w = list(v)
        w[p], w[q] = dst
        return tuple(w)

    def f(self, v, i):
        self.check_index(i)
        p, q, dst, src = self._positions(i)
        if (v[p], v[q]) != src:
            return None
        w = list(v)
        w[p], w[q] = dst
        return tuple(w)

    def epsilon(self, v, i):
        return 0 if self.e(v, i) is None else 1

    def phi(self, v, i):
        return 0 if self.f(v, i) is None else 1

    def weight(self, v):
        return self.cartan.weight(v)

    def key(self, v):
        return "".join("+" if x > 0 else "-" for x in v)

    def elements(self):
        from itertools import product
        out = []
        for v in product((1, -1), repeat=self.n):
            sign = 1
            for x in v:
                sign *= x
            if sign == self.parity:
                out.append(v)
        return out


def restrict(model: Crystal, index_set: Sequence[int]) -> Crystal:
    """The same model viewed with a smaller index set."""
    return _Restricted(model, tuple(index_set))


class _Restricted(Crystal):
    def __init__(self, base: Crystal, index_set: tuple[int, ...]):
        for i in index_set:
            base.check_index(i)
        self.base = base
        self.cartan = base.cartan
        self.index_set = index_set
        self.normal = base.normal

    def e(self, b, i):
        return self.base.e(b, i)

    def f(self, b, i):
        return self.base.f(b, i)

    def epsilon(self, b, i):
        return self.base.epsilon(b, i)

    def phi(self, b, i):
        return self.base.phi(b, i)

    def weight(self, b):
        return self.base.weight(b)

    def key(self, b):
        return self.base.key(b)

    def __getattr__(self, name: str) -> Any:
        return getattr(self.base, name)
