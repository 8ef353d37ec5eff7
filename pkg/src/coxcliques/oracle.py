"""Brute-force reference models, used by the test suite.

Nothing here touches the root-system word engine: groups are realised as
permutations, signed permutations, dihedral pairs or free reduced words, and
graphs are explored by plain BFS.  Generators are listed in the same order as
the engine's presets so that words can be compared letter for letter.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence


@dataclass(frozen=True)
class PermModel:
    family: str
    generators: tuple
    identity: Hashable
    multiply: Callable
    order: float  # math.inf for infinite models

    def evaluate(self, word: Sequence[int]):
        x = self.identity
        for s in word:
            x = self.multiply(x, self.generators[s])
        return x

    @property
    def rank(self) -> int:
        return len(self.generators)


def _perm_mul(a, b):
    # (a b)(i) = a(b(i))
    return tuple(a[i] for i in b)


def symmetric_model(n: int) -> PermModel:
    """A_n acting on n+1 points; s_i swaps points i-1 and i."""
    pts = n + 1
    gens = []
    for i in range(n):
        p = list(range(pts))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return PermModel(f"A{n}", tuple(gens), tuple(range(pts)), _perm_mul, math.factorial(pts))


def _signed_mul(a, b):
    # signed permutations as images of +1..+n
    out = []
    for x in b:
        y = a[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def _signed_swap(n, i, negate=False):
    p = list(range(1, n + 1))
    p[i], p[i + 1] = p[i + 1], p[i]
    if negate:
        p[i], p[i + 1] = -p[i], -p[i + 1]
    return tuple(p)


def hyperoctahedral_model(n: int) -> PermModel:
    """B_n: swaps of neighbouring coordinates, then negation of the last."""
    gens = [_signed_swap(n, i) for i in range(n - 1)]
    last = list(range(1, n + 1))
    last[-1] = -last[-1]
    gens.append(tuple(last))
    return PermModel(f"B{n}", tuple(gens), tuple(range(1, n + 1)), _signed_mul,
                     2 ** n * math.factorial(n))


def even_signed_model(n: int) -> PermModel:
    """D_n: swaps of neighbouring coordinates, then the negated last swap."""
    gens = [_signed_swap(n, i) for i in range(n - 1)]
    gens.append(_signed_swap(n, n - 2, negate=True))
    return PermModel(f"D{n}", tuple(gens), tuple(range(1, n + 1)), _signed_mul,
                     2 ** (n - 1) * math.factorial(n))


def dihedral_model(m) -> PermModel:
    """Symmetries of a regular m-gon as (rotation, flip); m may be inf."""
    mod = None if m == math.inf else m

    def multiply(a, b):
        r1, f1 = a
        r2, f2 = b
        r = r1 - r2 if f1 else r1 + r2
        if mod is not None:
            r %= mod
        return (r, f1 ^ f2)

    order = math.inf if mod is None else 2 * m
    return PermModel(f"I2({m})", ((0, 1), (1, 1)), (0, 0), multiply, order)


def free_model(n: int) -> PermModel:
    """The universal Coxeter group: words without repeated adjacent letters."""

    def multiply(a, b):
        a = list(a)
        for x in b:
            if a and a[-1] == x:
                a.pop()
            else:
                a.append(x)
        return tuple(a)

    order = 2 if n == 1 else math.inf
    return PermModel(f"U{n}", tuple((i,) for i in range(n)), (), multiply, order)


def product_model(models: Sequence[PermModel]) -> PermModel:
    models = tuple(models)
    gens = []
    for k, mdl in enumerate(models):
        for g in mdl.generators:
            gens.append(tuple(g if j == k else other.identity for j, other in enumerate(models)))

    def multiply(a, b):
        return tuple(mdl.multiply(x, y) for mdl, x, y in zip(models, a, b))

    order = math.prod(mdl.order for mdl in models)
    return PermModel("x".join(m.family for m in models), tuple(gens),
                     tuple(m.identity for m in models), multiply, order)


def model_for(name: str) -> PermModel:
    """Oracle model for a preset name, or ValueError when none exists."""
    parts = name.strip().split("x")
    if len(parts) > 1:
        return product_model([model_for(p) for p in parts])
    t = parts[0]
    if m := re.fullmatch(r"A(\d+)", t):
        return symmetric_model(int(m[1]))
    if m := re.fullmatch(r"[BC](\d+)", t):
        return hyperoctahedral_model(int(m[1]))
    if m := re.fullmatch(r"D(\d+)", t):
        return even_signed_model(int(m[1]))
    if m := re.fullmatch(r"I2\((\d+|inf)\)", t):
        return dihedral_model(math.inf if m[1] == "inf" else int(m[1]))
    if m := re.fullmatch(r"hypercube(\d+)", t):
        return product_model([symmetric_model(1)] * int(m[1]))
    if m := re.fullmatch(r"U(\d+)", t):
        return free_model(int(m[1]))
    raise ValueError(f"no oracle model for {name!r}")


def element_order(model: PermModel, x, cap: int = 64):
    """Multiplicative order of x, or math.inf if it exceeds ``cap``."""
    y = x
    for k in range(1, cap + 1):
        if y == model.identity:
            return k
        y = model.multiply(y, x)
    return math.inf


def coxeter_matrix(model: PermModel, cap: int = 64) -> list[list]:
    gens = model.generators
    return [[element_order(model, model.multiply(a, b), cap) if i != j else 1
             for j, b in enumerate(gens)] for i, a in enumerate(gens)]


@dataclass
class OracleGraph:
    elements: list  # index -> model element
    index: dict  # model element -> index
    adjacency: list  # index -> set of indices
    length: list  # BFS distance from the identity
    radius: float  # math.inf when the group was exhausted


def oracle_group_graph(model: PermModel, radius: float = math.inf, cap: int = 200_000) -> OracleGraph:
    """Left Cayley graph (v = s w) by BFS from the identity."""
    elements = [model.identity]
    index = {model.identity: 0}
    length = [0]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        if length[i] >= radius:
            continue
        w = elements[i]
        for g in model.generators:
            v = model.multiply(g, w)
            if v not in index:
                if len(elements) >= cap:
                    raise RuntimeError(f"oracle cap {cap} exceeded")
                index[v] = len(elements)
                elements.append(v)
                length.append(length[i] + 1)
                queue.append(index[v])
    adjacency = [set() for _ in elements]
    for i, w in enumerate(elements):
        for g in model.generators:
            j = index.get(model.multiply(g, w))
            if j is not None:
                adjacency[i].add(j)
    exhausted = all(len(a) == model.rank for a in adjacency)
    return OracleGraph(elements, index, adjacency, length, math.inf if exhausted else radius)


def bfs_distances(graph: OracleGraph, source: int) -> list:
    dist = [-1] * len(graph.elements)
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in graph.adjacency[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def distance_two_graph(graph: OracleGraph, within=None) -> dict:
    """index -> set of indices at graph distance exactly 2.

    Exact for vertices whose whole radius-2 neighbourhood lies in the graph.
    """
    verts = range(len(graph.elements)) if within is None else within
    keep = set(verts)
    out = {}
    for i in verts:
        near = graph.adjacency[i]
        far = set()
        for j in near:
            far |= graph.adjacency[j]
        out[i] = (far - near - {i}) & keep
    return out


def oracle_maximal_2cliques(adjacency: dict) -> set[frozenset]:
    """Maximal cliques (size >= 2) of a graph, Bron-Kerbosch with pivoting."""
    found: set = set()

    def expand(r, p, x):
        if not p and not x:
            if len(r) >= 2:
                found.add(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(adjacency[v] & p))
        for v in list(p - adjacency[pivot]):
            expand(r | {v}, p & adjacency[v], x & adjacency[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(adjacency), set())
    return found


def path_graph(n: int) -> dict:
    return {i: {j for j in (i - 1, i + 1) if 0 <= j < n} for i in range(n)}


def cycle_graph(n: int) -> dict:
    return {i: {(i - 1) % n, (i + 1) % n} for i in range(n)}
