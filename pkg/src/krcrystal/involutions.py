"""Lusztig involutions on KR graphs and pointwise checks of the identities relating them to e_0, f_0 and promotion."""

from __future__ import annotations

from .graph import CrystalGraph
from .kr_a import KRTypeA, glue_rectangle, rotate_matrix_180, unglue_rectangle
from .kr_d import EVEN, KRTypeD
from .kr_folded import KRFolded
from .tableau import enumerate_ssyt, evacuation, promotion, promotion_inverse
from .verify import Report, lusztig_involution

TYPE_A_IDENTITIES = ("pr-eq-eta1eta0", "prk-eq-etak-eta0", "e0-via-etak", "eta0-e0",
                     "pr-order", "e0-via-promotion", "dihedral", "eta-r-rotation", "eta0-evacuation")
IDENTITIES = ("e0-via-etar",) + TYPE_A_IDENTITIES


def kr_node(model) -> int:
    """The node r of B^{r,s}."""
    if isinstance(model, KRTypeA):
        return model.r
    if isinstance(model, KRFolded):
        return model.n
    if isinstance(model, KRTypeD):
        return model.n if model.parity == EVEN else model.n - 1
    raise TypeError(f"not a KR model: {type(model).__name__}")


def _chains(cartan, k: int) -> list[list[int]]:
    """Dynkin chains of I minus {0, k}, in path order."""
    n = cartan.n
    if cartan.family == "A":
        if k == 0:
            return [list(range(1, n))]
        return [list(range(1, k)), list(range(k + 1, n))]
    if cartan.family in ("C", "Dtwisted") and k == n:
        return [list(range(1, n))]
    if cartan.family == "D" and k == n:
        return [list(range(1, n))]
    if cartan.family == "D" and k == n - 1:
        return [list(range(1, n - 1)) + [n]]
    raise ValueError(f"no type A_(n-1) subdiagram I minus {{0, {k}}} handled for {cartan.family}")


def involution_data(cartan, k: int):
    """Index set I minus {0, k} and its duality i -> i* (reversal of each chain)."""
    dual = {}
    for chain in _chains(cartan, k):
        for a, b in zip(chain, reversed(chain)):
            dual[a] = b
    return tuple(sorted(dual)), dual


def eta_k(g: CrystalGraph, k: int) -> dict[int, int]:
    J, dual = involution_data(g.cartan, k)
    return lusztig_involution(g, J, dual)


def _agree(rep: Report, g: CrystalGraph, v: int, lhs, rhs, label: str) -> None:
    rep.checked += 1
    if lhs != rhs:
        show = (lambda x: "null" if x is None else g.keys[x])
        rep.add(f"{label} at {g.keys[v]}: {show(lhs)} != {show(rhs)}")


def _then(m: dict[int, int], x):
    return None if x is None else m[x]


def promotion_map(g: CrystalGraph, model: KRTypeA, inverse: bool = False) -> dict[int, int]:
    """pr (or pr^-1) on vertices, through the glued rectangle."""
    n, r, s = model.n, model.r, model.s
    step = promotion_inverse if inverse else promotion
    out = {}
    for v, M in enumerate(g.elements):
        U = step(glue_rectangle(M, n, r, s, "se"), n)
        out[v] = g.index[unglue_rectangle(U, n, r, "se").key()]
    return out


def _compose(*maps: dict[int, int]) -> dict[int, int]:
    """maps[0] after maps[1] after ... ."""
    first = maps[-1]
    out = {}
    for v in first:
        x = v
        for m in reversed(maps):
            x = m[x]
        out[v] = x
    return out


def _power(m: dict[int, int], k: int) -> dict[int, int]:
    out = {v: v for v in m}
    for _ in range(k):
        out = _compose(m, out)
    return out


def _order(m: dict[int, int], cap: int) -> int | None:
    x = dict(m)
    for k in range(1, cap + 1):
        if all(a == b for a, b in x.items()):
            return k
        x = _compose(m, x)
    return None


def check_zero_via_eta(g: CrystalGraph, model) -> Report:
    """e_0 = eta o f_r o eta and f_0 = eta o e_r o eta."""
    r = kr_node(model)
    eta = eta_k(g, r)
    rep = Report("e0-via-etar")
    for v in range(len(g)):
        _agree(rep, g, v, g.e(v, 0), _then(eta, g.f(eta[v], r)), "e_0")
        _agree(rep, g, v, g.f(v, 0), _then(eta, g.e(eta[v], r)), "f_0")
    return rep


def check_identity(name: str, g: CrystalGraph, model) -> Report:
    if name == "e0-via-etar":
        return check_zero_via_eta(g, model)
    if name not in TYPE_A_IDENTITIES:
        raise ValueError(f"unknown identity {name!r}")
    if not isinstance(model, KRTypeA):
        raise ValueError(f"identity {name} applies to type A only")
    n, r = model.n, model.r
    rep = Report(name)
    etas = {k: eta_k(g, k) for k in range(n)}
    pr = promotion_map(g, model)
    if name == "pr-eq-eta1eta0":
        both = _compose(etas[1], etas[0])
        for v in range(len(g)):
            _agree(rep, g, v, pr[v], both[v], "pr")
    elif name == "prk-eq-etak-eta0":
        for k in range(1, n):
            prk, both = _power(pr, k), _compose(etas[k], etas[0])
            for v in range(len(g)):
                _agree(rep, g, v, prk[v], both[v], f"pr^{k}")
    elif name == "e0-via-etak":
        for k in range(1, n):
            eta = etas[k]
            for v in range(len(g)):
                _agree(rep, g, v, g.e(v, 0), _then(eta, g.f(eta[v], k)), f"e_0 via eta_{k}")
                _agree(rep, g, v, g.f(v, 0), _then(eta, g.e(eta[v], k)), f"f_0 via eta_{k}")
    elif name == "eta0-e0":
        eta = etas[0]
        for v in range(len(g)):
            _agree(rep, g, v, _then(eta, g.e(v, 0)), g.f(eta[v], 0), "eta_0 e_0")
    elif name == "pr-order":
        prn = _power(pr, n)
        for v in range(len(g)):
            _agree(rep, g, v, prn[v], v, f"pr^{n}")
    elif name == "e0-via-promotion":
        inv = promotion_map(g, model, inverse=True)
        for v in range(len(g)):
            _agree(rep, g, v, g.e(v, 0), _then(inv, g.e(pr[v], 1)), "pr^-1 e_1 pr")
            _agree(rep, g, v, g.f(v, 0), _then(inv, g.f(pr[v], 1)), "pr^-1 f_1 pr")
    elif name == "dihedral":
        for k, eta in etas.items():
            rep.checked += 1
            if _order(eta, 2) is None:
                rep.add(f"eta_{k} is not an involution")
        rep.checked += 1
        order = _order(_compose(etas[1], etas[0]), n)
        expected = n if len(g) > 1 else 1
        if order != expected:
            rep.add(f"eta_1 eta_0 has order {order}, expected {expected}")
    elif name == "eta-r-rotation":
        eta = etas[r]
        for v, M in enumerate(g.elements):
            _agree(rep, g, v, eta[v], g.index[rotate_matrix_180(M).key()], "eta_r")
    elif name == "eta0-evacuation":
        eta = etas[0]
        for v, M in enumerate(g.elements):
            rep.checked += 1
            U = glue_rectangle(M, n, r, model.s, "se")
            W = glue_rectangle(g.elements[eta[v]], n, r, model.s, "se")
            if W != evacuation(U, n):
                rep.add(f"glued eta_0 differs from evacuation at {g.keys[v]}")
    return rep


def applicable_identities(model) -> tuple[str, ...]:
    return IDENTITIES if isinstance(model, KRTypeA) else ("e0-via-etar",)


def run_identities(g: CrystalGraph, model, names=None) -> list[Report]:
    return [check_identity(name, g, model) for name in (names or applicable_identities(model))]


def promotion_order_witnesses(shape, n: int) -> list:
    """Tableaux of SST_[n](shape) with pr^n != id."""
    out = []
    offsets = [0] * len(shape)
    for T in enumerate_ssyt(list(shape), range(1, n + 1), offsets):
        U = T
        for _ in range(n):
            U = promotion(U, n)
        if U != T:
            out.append(T)
    return out
