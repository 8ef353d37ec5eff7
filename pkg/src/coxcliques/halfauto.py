"""Automorphisms of the half-graphs and their extension to the Cayley graph.

For ``|S| >= 5`` an isomorphism ``f`` between half-graphs determines a unique
Cayley automorphism: the coset ``S w`` lies in one parity class, its image
is again some ``S w'``, and ``w'`` (the only vertex adjacent to all of
``S w'``) is the image of ``w``.  Everything here works on finite groups
given in full.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .cayley import Ball, full_group, two_neighbors
from .cliques import TwoClique, classify_clique, ROMAN
from .coxeter import CoxeterError, CoxeterSystem, Element, mul, mul_gen_left


class PreconditionError(CoxeterError):
    pass


class NotExtendable(RuntimeError):
    pass


@dataclass(frozen=True)
class VertexMap:
    """A bijection from the half-graph on W_i onto the one on W_j."""

    system: CoxeterSystem
    source_parity: int
    target_parity: int
    mapping: dict

    def __call__(self, w: Element) -> Element:
        return self.mapping[w]


@dataclass(frozen=True)
class CayleyAutomorphism:
    system: CoxeterSystem
    mapping: dict
    provenance: str  # "Rw" | "diagram" | "extension" | "composite"

    def __call__(self, w: Element) -> Element:
        return self.mapping[w]

    def restrict(self, parity: int) -> VertexMap:
        sub = {w: v for w, v in self.mapping.items() if w.parity == parity}
        targets = {v.parity for v in sub.values()}
        if len(targets) != 1:
            raise ValueError("automorphism does not send the parity class into a single class")
        return VertexMap(self.system, parity, targets.pop(), sub)

    def same_map(self, other: "CayleyAutomorphism") -> bool:
        return self.mapping == other.mapping


def _group(sys: CoxeterSystem, group: Ball | None) -> Ball:
    return full_group(sys) if group is None else group


def is_cayley_automorphism(sys: CoxeterSystem, mapping: dict, group: Ball) -> bool:
    verts = set(group.vertices)
    if set(mapping) != verts or set(mapping.values()) != verts:
        return False
    for w in group.vertices:
        image_nbrs = {mapping[mul_gen_left(sys, s, w)] for s in range(sys.rank)}
        fw = mapping[w]
        if image_nbrs != {mul_gen_left(sys, s, fw) for s in range(sys.rank)}:
            return False
    return True


def _verified(sys, mapping, group, provenance) -> CayleyAutomorphism:
    if not is_cayley_automorphism(sys, mapping, group):
        raise CoxeterError(f"{provenance} map is not a Cayley graph automorphism")
    return CayleyAutomorphism(sys, mapping, provenance)


def right_multiplication(sys: CoxeterSystem, w: Element, group: Ball | None = None) -> CayleyAutomorphism:
    """R_w : v -> v w."""
    group = _group(sys, group)
    return _verified(sys, {v: mul(sys, v, w) for v in group.vertices}, group, "Rw")


def diagram_automorphism(sys: CoxeterSystem, perm: Sequence[int], group: Ball | None = None) -> CayleyAutomorphism:
    """The automorphism induced by a label-preserving permutation of S."""
    perm = tuple(perm)
    n = sys.rank
    if sorted(perm) != list(range(n)):
        raise CoxeterError(f"{perm} is not a permutation of the {n} generators")
    for s in range(n):
        for t in range(n):
            if sys.m(perm[s], perm[t]) != sys.m(s, t):
                raise CoxeterError(
                    f"permutation breaks the label m({sys.names[s]},{sys.names[t]})"
                )
    group = _group(sys, group)
    mapping = {v: sys.element(perm[s] for s in v.word) for v in group.vertices}
    return _verified(sys, mapping, group, "diagram")


def builtin_automorphism(sys: CoxeterSystem, kind: str, arg, group: Ball | None = None) -> CayleyAutomorphism:
    if kind == "Rw":
        return right_multiplication(sys, arg, group)
    if kind == "diagram":
        return diagram_automorphism(sys, arg, group)
    raise ValueError(f"unknown automorphism kind {kind!r}")


def compose(f: CayleyAutomorphism, g: CayleyAutomorphism) -> CayleyAutomorphism:
    """f after g."""
    return CayleyAutomorphism(f.system, {w: f.mapping[v] for w, v in g.mapping.items()}, "composite")


def is_half_isomorphism(sys: CoxeterSystem, f: VertexMap, group: Ball) -> bool:
    src = {w for w in group.vertices if w.parity == f.source_parity}
    dst = {w for w in group.vertices if w.parity == f.target_parity}
    if set(f.mapping) != src or set(f.mapping.values()) != dst:
        return False
    for w in src:
        if {f.mapping[v] for v in two_neighbors(sys, w)} != two_neighbors(sys, f.mapping[w]):
            return False
    return True


def _coset_center(sys: CoxeterSystem, image: set) -> list[Element]:
    """All w' with S w' equal to ``image``."""
    x = next(iter(image))
    out = []
    for s in range(sys.rank):
        c = mul_gen_left(sys, s, x)
        if {mul_gen_left(sys, t, c) for t in range(sys.rank)} == image:
            out.append(c)
    return out


def extend_half_automorphism(sys: CoxeterSystem, f: VertexMap, group: Ball | None = None,
                             enforce_rank: bool = True) -> CayleyAutomorphism:
    """The unique Cayley automorphism restricting to ``f``.

    ``enforce_rank=False`` lifts the ``|S| >= 5`` requirement so that
    failures at small rank can be demonstrated.
    """
    if enforce_rank and sys.rank < 5:
        raise PreconditionError(f"extension needs |S| >= 5, got {sys.rank}")
    group = _group(sys, group)
    if not group.complete:
        raise PreconditionError("extension needs the whole finite group")
    if not is_half_isomorphism(sys, f, group):
        raise PreconditionError("map is not an isomorphism between half-graphs")
    ext = dict(f.mapping)
    for w in group.vertices:
        if w.parity == f.source_parity:
            continue
        image = {f.mapping[mul_gen_left(sys, s, w)] for s in range(sys.rank)}
        centers = _coset_center(sys, image)
        if not centers:
            types = classify_clique(sys, TwoClique.of(image), maximal=False)
            kinds = "/".join(ROMAN[t.tag] for t in types) or "unclassified"
            raise NotExtendable(
                f"image of S*{w} is a type {kinds} clique, not an S-coset"
            )
        if len(centers) > 1:
            raise NotExtendable(f"image of S*{w} has {len(centers)} centers")
        ext[w] = centers[0]
    if not is_cayley_automorphism(sys, ext, group):
        raise NotExtendable("extended map does not preserve Cayley adjacency")
    return CayleyAutomorphism(sys, ext, "extension")


def half_graph_automorphisms(sys: CoxeterSystem, parity: int, group: Ball | None = None,
                             limit: int = 16):
    """Yield automorphisms of a small half-graph, lexicographically by images.

    Plain backtracking; only meant for half-graphs with a handful of vertices.
    """
    group = _group(sys, group)
    verts = [w for w in group.vertices if w.parity == parity]
    if len(verts) > limit:
        raise PreconditionError(f"half-graph has {len(verts)} vertices, search limit is {limit}")
    vset = set(verts)
    nbrs = {w: two_neighbors(sys, w) & vset for w in verts}
    image: dict = {}
    used: set = set()

    def extend(k):
        if k == len(verts):
            yield dict(image)
            return
        v = verts[k]
        for c in verts:
            if c in used or len(nbrs[c]) != len(nbrs[v]):
                continue
            ok = all((image[u] in nbrs[c]) == (u in nbrs[v]) for u in verts[:k])
            if ok:
                image[v] = c
                used.add(c)
                yield from extend(k + 1)
                del image[v]
                used.discard(c)

    for m in extend(0):
        yield VertexMap(sys, parity, parity, m)


def type_breaking_witness(sys: CoxeterSystem, parity: int = 1, group: Ball | None = None) -> VertexMap:
    """The first half-graph automorphism sending some S-coset to a non-coset."""
    group = _group(sys, group)
    for f in half_graph_automorphisms(sys, parity, group):
        for w in group.vertices:
            if w.parity == parity:
                continue
            image = {f.mapping[mul_gen_left(sys, s, w)] for s in range(sys.rank)}
            if not _coset_center(sys, image):
                return f
    raise NotExtendable("every half-graph automorphism preserves S-cosets")


@dataclass(frozen=True)
class Decomposition:
    f1: CayleyAutomorphism
    f2: CayleyAutomorphism
    swapped: bool

    @property
    def is_automorphism(self) -> bool:
        return self.f1.same_map(self.f2)


def preserves_distance_two(sys: CoxeterSystem, g: dict, group: Ball) -> bool:
    verts = set(group.vertices)
    if set(g) != verts or set(g.values()) != verts:
        return False
    return all(
        {g[v] for v in two_neighbors(sys, w)} == two_neighbors(sys, g[w])
        for w in group.vertices
    )


def decompose_distance2_bijection(sys: CoxeterSystem, g: dict, group: Ball | None = None) -> Decomposition:
    """Split a distance-2 preserving bijection into two Cayley automorphisms.

    ``f1`` agrees with ``g`` on W1 and ``f2`` on W2; ``g`` is itself an
    automorphism iff they coincide.
    """
    if sys.rank < 5:
        raise PreconditionError(f"decomposition needs |S| >= 5, got {sys.rank}")
    group = _group(sys, group)
    if not preserves_distance_two(sys, g, group):
        raise PreconditionError("map is not a bijection preserving distance 2 both ways")
    flips = {g[w].parity != w.parity for w in group.vertices}
    if len(flips) != 1:
        raise PreconditionError("map neither preserves nor swaps the parity classes")
    swapped = flips.pop()
    parts = []
    for parity in (1, 2):
        sub = {w: v for w, v in g.items() if w.parity == parity}
        target = 3 - parity if swapped else parity
        parts.append(extend_half_automorphism(sys, VertexMap(sys, parity, target, sub), group))
    return Decomposition(parts[0], parts[1], swapped)


def patched_map(f1: Callable, f2: Callable, group: Ball) -> dict:
    """f1 on W1 and f2 on W2."""
    return {w: (f1(w) if w.parity == 1 else f2(w)) for w in group.vertices}


def map_to_json(sys: CoxeterSystem, mapping: dict) -> list:
    fw = sys.format_word
    return [[fw(w.word), fw(mapping[w].word)] for w in sorted(mapping, key=Element.sort_key)]


def map_from_json(sys: CoxeterSystem, pairs) -> dict:
    return {sys.parse_word(a): sys.parse_word(b) for a, b in pairs}
