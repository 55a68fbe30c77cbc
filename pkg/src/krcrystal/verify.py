"""Axiom and string checks, the Lusztig involution, and colored-graph isomorphism."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .crystal import NEG_INF
from .graph import CrystalGraph


@dataclass
class Report:
    name: str
    violations: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str, limit: int = 200) -> None:
        if len(self.violations) < limit:
            self.violations.append(msg)
        elif len(self.violations) == limit:
            self.violations.append("... further violations suppressed")

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "violations": list(self.violations)}


def verify_axioms(g: CrystalGraph) -> Report:
    rep = Report("axioms")
    key = g.keys
    for v in range(len(g)):
        for i in g.index_set:
            rep.checked += 1
            e, p = g.eps[v][i], g.phi[v][i]
            if (e == NEG_INF) != (p == NEG_INF):
                rep.add(f"(1) {key[v]} i={i}: only one of eps/phi is -inf")
            elif e != NEG_INF and p != g.wt[v].pair(i) + e:
                rep.add(f"(1) {key[v]} i={i}: phi={p} != <wt,h>={g.wt[v].pair(i)} + eps={e}")
            if p == NEG_INF and (g.e(v, i) is not None or g.f(v, i) is not None):
                rep.add(f"(5) {key[v]} i={i}: operator defined although phi=-inf")

    def shifts(u, i, v, axiom, sign):
        # v = x_i(u); raising shifts by +alpha_i, lowering by -alpha_i
        alpha = g.cartan.simple_root(i)
        if g.wt[v] != (g.wt[u] + alpha if sign > 0 else g.wt[u] - alpha):
            rep.add(f"({axiom}) {key[u]} -> {key[v]} i={i}: weight shift is not {'+' if sign > 0 else '-'}alpha_{i}")
        if g.eps[u][i] != NEG_INF:
            if g.eps[v][i] != g.eps[u][i] - sign or g.phi[v][i] != g.phi[u][i] + sign:
                rep.add(f"({axiom}) {key[u]} -> {key[v]} i={i}: eps/phi not shifted by one")

    for u, i, v in g.edges:
        rep.checked += 1
        shifts(u, i, v, 3, -1)
    raising = g.raising if g.raising is not None else [(v, i, u) for u, i, v in g.edges]
    for v, i, u in raising:
        rep.checked += 1
        shifts(v, i, u, 2, +1)

    dup_f = [k for k, c in Counter((u, i) for u, i, _ in g.edges).items() if c > 1]
    dup_e = [k for k, c in Counter((v, i) for v, i, _ in raising).items() if c > 1]
    for v, i in dup_f:
        rep.add(f"(4) {key[v]} has several f_{i}-images")
    for v, i in dup_e:
        rep.add(f"(4) {key[v]} has several e_{i}-images")
    lowered = {(u, i, v) for u, i, v in g.edges}
    raised = {(u, i, v) for v, i, u in raising}
    for u, i, v in sorted(lowered ^ raised):
        rep.add(f"(4) f_{i}({key[u]}) = {key[v]} is not matched by e_{i}({key[v]}) = {key[u]}")
    return rep


def verify_strings(g: CrystalGraph, i: int) -> Report:
    rep = Report(f"strings[{i}]")
    if i not in g.index_set:
        rep.add(f"index {i} not in graph")
        return rep
    cnt_out = Counter(u for u, c, _ in g.edges if c == i)
    cnt_in = Counter(v for _, c, v in g.edges if c == i)
    for v in range(len(g)):
        rep.checked += 1
        if cnt_out[v] > 1 or cnt_in[v] > 1:
            rep.add(f"{g.keys[v]}: {i}-string is not linear")
            continue
        if g.eps[v][i] == NEG_INF:
            continue
        up, x = 0, v
        while (x := g.e(x, i)) is not None:
            up += 1
            if up > len(g):
                break
        down, x = 0, v
        while (x := g.f(x, i)) is not None:
            down += 1
            if down > len(g):
                break
        if up > len(g) or down > len(g):
            rep.add(f"{g.keys[v]}: {i}-string is cyclic")
            continue
        if g.eps[v][i] != up or g.phi[v][i] != down:
            rep.add(f"{g.keys[v]}: stored (eps,phi)=({g.eps[v][i]},{g.phi[v][i]}) "
                    f"but string ends at distances ({up},{down})")
    return rep


class InvolutionError(ValueError):
    pass


def lusztig_involution(g: CrystalGraph, index_set: Iterable[int],
                       duality: Callable[[int], int] | Mapping[int, int],
                       weight_map: Callable | None = None) -> dict[int, int]:
    """eta on every component of the restriction to ``index_set``.

    The highest weight vertex goes to the lowest one and eta(f_i b) = e_{i*}(eta b).
    """
    J = tuple(index_set)
    dual = duality if callable(duality) else duality.__getitem__
    for i in J:
        if dual(i) not in J or dual(dual(i)) != i:
            raise InvolutionError(f"duality is not an involution of {J} at {i}")
    eta: dict[int, int] = {}
    for comp in g.components(J):
        highs = [v for v in comp if all(g.e(v, i) is None for i in J)]
        lows = [v for v in comp if all(g.f(v, i) is None for i in J)]
        if len(highs) != 1 or len(lows) != 1:
            raise InvolutionError(
                f"component of {g.keys[comp[0]]} has {len(highs)} highest and {len(lows)} lowest vertices")
        eta[highs[0]] = lows[0]
        queue = deque([highs[0]])
        while queue:
            b = queue.popleft()
            for i in J:
                c = g.f(b, i)
                if c is None:
                    continue
                img = g.e(eta[b], dual(i))
                if img is None:
                    raise InvolutionError(f"e_{dual(i)} undefined at eta({g.keys[b]})")
                if c in eta:
                    if eta[c] != img:
                        raise InvolutionError(f"path inconsistency at {g.keys[c]}")
                else:
                    eta[c] = img
                    queue.append(c)
    if len(eta) != len(g):
        raise InvolutionError("eta is not total")
    for v, w in eta.items():
        if eta[w] != v:
            raise InvolutionError(f"eta is not involutive at {g.keys[v]}")
        if weight_map is not None and g.wt[w] != weight_map(g.wt[v]):
            raise InvolutionError(f"weight of eta({g.keys[v]}) is not w_0 of its weight")
    return eta


@dataclass
class IsoResult:
    ok: bool
    mapping: dict[int, int] | None = None
    reason: str = ""
    method: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _vertex_sig(g: CrystalGraph, v: int):
    return (g.wt[v].coords, tuple(g.eps[v][i] for i in g.index_set),
            tuple(g.phi[v][i] for i in g.index_set))


def graph_isomorphism(g1: CrystalGraph, g2: CrystalGraph) -> IsoResult:
    if g1.index_set != g2.index_set:
        return IsoResult(False, reason="index sets differ")
    if g1.cartan != g2.cartan:
        return IsoResult(False, reason="types differ")
    if len(g1) != len(g2):
        return IsoResult(False, reason=f"vertex counts {len(g1)} != {len(g2)}")
    if len(g1.edges) != len(g2.edges):
        return IsoResult(False, reason="edge counts differ")
    if not len(g1):
        return IsoResult(True, {}, method="empty")
    classical = tuple(i for i in g1.index_set if i != 0) or g1.index_set
    h1, h2 = g1.highest_weight_vertices(classical), g2.highest_weight_vertices(classical)
    connected = len(g1.components(g1.index_set)) == 1 and len(g2.components(g2.index_set)) == 1
    if connected and len(h1) == 1 and len(h2) == 1:
        return _propagate(g1, g2, h1[0], h2[0])
    return _backtrack(g1, g2)


def _propagate(g1, g2, a, b) -> IsoResult:
    if _vertex_sig(g1, a) != _vertex_sig(g2, b):
        return IsoResult(False, reason="highest weight vertices differ in weight or structure functions",
                         method="propagation")
    m, inv = {a: b}, {b: a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        y = m[x]
        for i in g1.index_set:
            for step1, step2 in ((g1.f(x, i), g2.f(y, i)), (g1.e(x, i), g2.e(y, i))):
                if (step1 is None) != (step2 is None):
                    return IsoResult(False, reason=f"edge of color {i} at {g1.keys[x]} has no partner",
                                     method="propagation")
                if step1 is None:
                    continue
                if step1 in m:
                    if m[step1] != step2:
                        return IsoResult(False, reason="inconsistent propagation", method="propagation")
                    continue
                if step2 in inv:
                    return IsoResult(False, reason="not injective", method="propagation")
                m[step1], inv[step2] = step2, step1
                queue.append(step1)
    if len(m) != len(g1):
        return IsoResult(False, reason="propagation is not total", method="propagation")
    for x, y in m.items():
        if _vertex_sig(g1, x) != _vertex_sig(g2, y):
            return IsoResult(False, reason=f"weight or structure functions differ at {g1.keys[x]}",
                             method="propagation")
    return IsoResult(True, m, method="propagation")


def _to_nx(g: CrystalGraph) -> nx.DiGraph:
    G = nx.DiGraph()
    for v in range(len(g)):
        G.add_node(v, sig=_vertex_sig(g, v))
    colors: dict[tuple[int, int], set] = {}
    for u, i, v in g.edges:
        colors.setdefault((u, v), set()).add(i)
    for (u, v), c in colors.items():
        G.add_edge(u, v, colors=frozenset(c))
    return G


def _backtrack(g1, g2) -> IsoResult:
    matcher = DiGraphMatcher(_to_nx(g1), _to_nx(g2),
                             node_match=lambda a, b: a["sig"] == b["sig"],
                             edge_match=lambda a, b: a["colors"] == b["colors"])
    if matcher.is_isomorphic():
        return IsoResult(True, dict(matcher.mapping), method="backtracking")
    return IsoResult(False, reason="no weight-compatible colored isomorphism", method="backtracking")
