"""Left Cayley graphs: balls, whole finite groups and the half-graphs.

Adjacency is ``w ~ s w``.  Vertex order is ShortLex on canonical words
everywhere, so every export is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .coxeter import CoxeterSystem, Element, _check, mul_gen_left

DEFAULT_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int, found: int):
        super().__init__(f"vertex budget {budget} exceeded ({found} vertices found so far)")
        self.budget = budget
        self.found = found


@dataclass(frozen=True)
class Ball:
    system: CoxeterSystem
    center: Element
    radius: int
    vertices: tuple[Element, ...]
    adjacency: dict  # Element -> tuple of neighbours inside the ball
    layer: dict  # Element -> distance to the center
    complete: bool = False  # True when the ball is the whole group

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, w: Element) -> bool:
        return w in self.layer

    def edges(self) -> list[tuple[Element, Element]]:
        out = []
        for v in self.vertices:
            for u in self.adjacency[v]:
                if v < u:
                    out.append((v, u))
        return sorted(out, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


@dataclass(frozen=True)
class HalfGraph:
    system: CoxeterSystem
    parity: int  # 1 = odd lengths (W1), 2 = even lengths (W2)
    vertices: tuple[Element, ...]
    edges: tuple[tuple[Element, Element], ...]

    def neighbours(self) -> dict:
        nbrs = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return nbrs


def _bfs(sys: CoxeterSystem, center: Element, radius, budget: int):
    layer = {center: 0}
    frontier = [center]
    depth = 0
    while frontier and (radius is None or depth < radius):
        nxt = []
        for w in frontier:
            for s in range(sys.rank):
                v = mul_gen_left(sys, s, w)
                if v not in layer:
                    layer[v] = depth + 1
                    nxt.append(v)
                    if len(layer) > budget:
                        raise BudgetExceeded(budget, len(layer))
        if not nxt:
            break
        frontier = nxt
        depth += 1
    return layer, depth


def _assemble(sys, center, radius, layer) -> Ball:
    verts = tuple(sorted(layer, key=Element.sort_key))
    adj = {}
    complete = True
    for w in verts:
        nb = {mul_gen_left(sys, s, w) for s in range(sys.rank)}
        inside = [v for v in nb if v in layer]
        complete = complete and len(inside) == len(nb)
        adj[w] = tuple(sorted(inside, key=Element.sort_key))
    return Ball(sys, center, radius, verts, adj, layer, complete)


def generate_ball(sys: CoxeterSystem, center: Element | None = None, radius: int = 0,
                  budget: int = DEFAULT_BUDGET) -> Ball:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    center = sys.identity() if center is None else center
    _check(sys, center)
    layer, _ = _bfs(sys, center, radius, budget)
    return _assemble(sys, center, radius, layer)


def full_group(sys: CoxeterSystem, budget: int = DEFAULT_BUDGET) -> Ball:
    """The whole group as a ball around the identity; radius = diameter."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    e = sys.identity()
    layer, depth = _bfs(sys, e, None, budget)
    return _assemble(sys, e, depth, layer)


def two_neighbors(sys: CoxeterSystem, u: Element) -> frozenset[Element]:
    """All v with d(u, v) = 2, as the products x u with l(x) = 2."""
    _check(sys, u)
    out = set()
    for t in range(sys.rank):
        tu = mul_gen_left(sys, t, u)
        for s in range(sys.rank):
            if s != t:
                out.add(mul_gen_left(sys, s, tu))
    return frozenset(out)


def parity_split(ball: Ball) -> tuple[HalfGraph, HalfGraph]:
    sys = ball.system
    halves = []
    for parity in (1, 2):
        verts = tuple(v for v in ball.vertices if v.parity == parity)
        edges = []
        for v in verts:
            for u in two_neighbors(sys, v):
                if u in ball and v < u:
                    edges.append((v, u))
        edges.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key()))
        halves.append(HalfGraph(sys, parity, verts, tuple(edges)))
    return halves[0], halves[1]


# exports

def _dot(name: str, sys: CoxeterSystem, verts: Iterable[Element], edges) -> str:
    lines = [f"graph {json.dumps(name)} {{"]
    for v in verts:
        label = sys.format_word(v.word)
        lines.append(f"  {json.dumps(label)};")
    for a, b in edges:
        lines.append(f"  {json.dumps(sys.format_word(a.word))} -- {json.dumps(sys.format_word(b.word))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ball_to_dot(ball: Ball) -> str:
    return _dot(f"{ball.system.name} r={ball.radius}", ball.system, ball.vertices, ball.edges())


def halfgraph_to_dot(half: HalfGraph) -> str:
    return _dot(f"{half.system.name} Gamma{half.parity}", half.system, half.vertices, half.edges)


def _json_graph(sys, verts, edges, extra: dict) -> dict:
    fw = sys.format_word
    return {
        **extra,
        "vertices": [fw(v.word) for v in verts],
        "edges": [[fw(a.word), fw(b.word)] for a, b in edges],
    }


def ball_to_json(ball: Ball) -> dict:
    sys = ball.system
    return _json_graph(sys, ball.vertices, ball.edges(), {
        "group": sys.name,
        "generators": list(sys.names),
        "center": sys.format_word(ball.center.word),
        "radius": ball.radius,
        "complete": ball.complete,
    })


def halfgraph_to_json(half: HalfGraph) -> dict:
    sys = half.system
    return _json_graph(sys, half.vertices, half.edges, {
        "group": sys.name,
        "generators": list(sys.names),
        "parity": half.parity,
    })
