"""Crystal graphs: breadth-first generation, dualization and serialization."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable

from .crystal import NEG_INF, Crystal
from .weights import CartanType, Weight

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class CrystalGraph:
    """Edge-colored digraph; an edge (u, i, v) means f_i(u) = v.

    ``raising`` holds the separately computed e-edges (v, i, u) meaning e_i(v) = u;
    for a well-formed crystal it is exactly the reverse of ``edges``.
    """

    cartan: CartanType
    index_set: tuple[int, ...]
    keys: list[str]
    elements: list[Any]
    wt: list[Weight]
    eps: list[dict[int, float]]
    phi: list[dict[int, float]]
    edges: list[tuple[int, int, int]]
    raising: list[tuple[int, int, int]] | None = None
    context: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {k: v for v, k in enumerate(self.keys)}
        self._refresh()

    def _refresh(self):
        self.f_map: dict[tuple[int, int], int] = {}
        self.e_map: dict[tuple[int, int], int] = {}
        for u, i, v in self.edges:
            self.f_map[(u, i)] = v
            self.e_map[(v, i)] = u

    def __len__(self) -> int:
        return len(self.keys)

    def vertex(self, key: str) -> int:
        return self.index[key]

    def f(self, v: int, i: int):
        return self.f_map.get((v, i))

    def e(self, v: int, i: int):
        return self.e_map.get((v, i))

    def edge_counts(self) -> dict[int, int]:
        out = {i: 0 for i in self.index_set}
        for _, i, _ in self.edges:
            out[i] += 1
        return out

    def highest_weight_vertices(self, index_set: Iterable[int]) -> list[int]:
        idx = tuple(index_set)
        return [v for v in range(len(self)) if all(self.e(v, i) is None for i in idx)]

    def components(self, index_set: Iterable[int]) -> list[list[int]]:
        idx = set(index_set)
        adj: dict[int, list[int]] = {v: [] for v in range(len(self))}
        for u, i, v in self.edges:
            if i in idx:
                adj[u].append(v)
                adj[v].append(u)
        seen, comps = set(), []
        for s in range(len(self)):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    # serialization
    def to_json(self) -> dict:
        def enc(x):
            return None if x == NEG_INF else int(x)
        return {
            "context": {**self.context, "family": self.cartan.family, "rank": self.cartan.n,
                        "index_set": list(self.index_set)},
            "vertices": [
                {"key": k, "wt": list(w.coords),
                 "eps": [enc(self.eps[v][i]) for i in self.index_set],
                 "phi": [enc(self.phi[v][i]) for i in self.index_set]}
                for v, (k, w) in enumerate(zip(self.keys, self.wt))
            ],
            "edges": [[self.keys[u], i, self.keys[v]] for u, i, v in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, doc: dict) -> "CrystalGraph":
        ctx = dict(doc["context"])
        cartan = CartanType(ctx["family"], ctx["rank"])
        idx = tuple(ctx["index_set"])

        def dec(x):
            return NEG_INF if x is None else x
        keys = [v["key"] for v in doc["vertices"]]
        pos = {k: j for j, k in enumerate(keys)}
        return cls(
            cartan=cartan,
            index_set=idx,
            keys=keys,
            elements=list(keys),
            wt=[cartan.weight(v["wt"]) for v in doc["vertices"]],
            eps=[{i: dec(x) for i, x in zip(idx, v["eps"])} for v in doc["vertices"]],
            phi=[{i: dec(x) for i, x in zip(idx, v["phi"])} for v in doc["vertices"]],
            edges=[(pos[a], i, pos[b]) for a, i, b in doc["edges"]],
            context={k: v for k, v in ctx.items() if k not in ("family", "rank", "index_set")},
        )

    @classmethod
    def loads(cls, text: str) -> "CrystalGraph":
        return cls.from_json(json.loads(text))

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for v, k in enumerate(self.keys):
            lines.append(f'  N{v} [label={json.dumps(k)}];')
        for u, i, v in self.edges:
            lines.append(f"  N{u} -> N{v} [label={i}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def same_as(self, other: "CrystalGraph") -> bool:
        """Equality up to vertex order, by canonical keys."""
        if sorted(self.keys) != sorted(other.keys) or self.index_set != other.index_set:
            return False
        for k in self.keys:
            a, b = self.index[k], other.index[k]
            if self.wt[a] != other.wt[b] or self.eps[a] != other.eps[b] or self.phi[a] != other.phi[b]:
                return False
        mine = {(self.keys[u], i, self.keys[v]) for u, i, v in self.edges}
        theirs = {(other.keys[u], i, other.keys[v]) for u, i, v in other.edges}
        return mine == theirs


def generate_graph(model: Crystal, seeds: Iterable[Any], budget: int = DEFAULT_BUDGET,
                   truncate: bool = False, context: dict | None = None) -> CrystalGraph:
    """Breadth-first closure of ``seeds`` under all e_i and f_i.

    With ``truncate`` the search stops at ``budget`` vertices (edges leaving
    the truncated set are dropped); otherwise exceeding the budget raises.
    """
    idx = model.index_set
    seeds = sorted(seeds, key=model.key)
    keys: list[str] = []
    elements: list[Any] = []
    pos: dict[str, int] = {}
    queue: deque[int] = deque()

    def add(b) -> int | None:
        k = model.key(b)
        v = pos.get(k)
        if v is not None:
            return v
        if len(keys) >= budget:
            if truncate:
                return None
            raise BudgetExceeded(f"vertex budget {budget} exceeded")
        pos[k] = len(keys)
        keys.append(k)
        elements.append(b)
        queue.append(pos[k])
        return pos[k]

    for b in seeds:
        add(b)
    edges, raising = [], []
    while queue:
        v = queue.popleft()
        b = elements[v]
        for i in idx:
            y = model.f(b, i)
            if y is not None:
                w = add(y)
                if w is not None:
                    edges.append((v, i, w))
            x = model.e(b, i)
            if x is not None:
                w = add(x)
                if w is not None:
                    raising.append((v, i, w))
    edges.sort()
    raising.sort()
    wt = [model.weight(b) for b in elements]
    g = CrystalGraph(model.cartan, idx, keys, elements, wt, [], [], edges, raising,
                     dict(context or {}))
    if model.normal:
        g.eps, g.phi = string_lengths(g)
    else:
        g.eps = [{i: model.epsilon(b, i) for i in idx} for b in elements]
        g.phi = [{i: model.phi(b, i) for i in idx} for b in elements]
    return g


def string_lengths(g: CrystalGraph):
    """Distances to the two ends of every i-string."""
    eps = [dict() for _ in range(len(g))]
    phi = [dict() for _ in range(len(g))]
    for i in g.index_set:
        for v in range(len(g)):
            if g.e(v, i) is not None:
                continue
            chain = [v]
            while True:
                w = g.f(chain[-1], i)
                if w is None or len(chain) > len(g):
                    break
                chain.append(w)
            m = len(chain) - 1
            for d, w in enumerate(chain):
                eps[w][i] = d
                phi[w][i] = m - d
        for v in range(len(g)):
            # vertices on cyclic strings never get a top; flag them with -1
            eps[v].setdefault(i, -1)
            phi[v].setdefault(i, -1)
    return eps, phi


def dualize(g: CrystalGraph) -> CrystalGraph:
    """Reverse edges, negate weights, swap eps and phi."""
    return CrystalGraph(
        cartan=g.cartan,
        index_set=g.index_set,
        keys=list(g.keys),
        elements=list(g.elements),
        wt=[-w for w in g.wt],
        eps=[dict(p) for p in g.phi],
        phi=[dict(e) for e in g.eps],
        edges=sorted(g.raising) if g.raising is not None else sorted((v, i, u) for u, i, v in g.edges),
        raising=sorted(g.edges) if g.raising is not None else None,
        context=dict(g.context),
    )
