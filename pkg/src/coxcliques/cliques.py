"""Maximal 2-cliques of the Cayley graph and their classification.

A 2-clique is a set of elements at pairwise distance exactly 2.  Every
maximal one is a translate ``C w`` of one of three templates:

* ``S``                       (tag ``S-coset``, type I)
* ``{s, s', s'', s s' s''}``  for a mutually commuting triple
                              (tag ``commuting-triple``, type II)
* ``{s, s', s s' s}``         for ``m(s, s') = 3`` (tag ``braid``, type III)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cayley import DEFAULT_BUDGET, full_group, generate_ball, two_neighbors
from .coxeter import CoxeterSystem, Element, _check, inverse, mul, mul_gen_left

S_COSET = "S-coset"
COMMUTING_TRIPLE = "commuting-triple"
BRAID = "braid"
TAG_ORDER = (S_COSET, COMMUTING_TRIPLE, BRAID)
ROMAN = {S_COSET: "I", COMMUTING_TRIPLE: "II", BRAID: "III"}


class TheoremViolation(RuntimeError):
    """A maximal 2-clique that matches none of the three templates."""

    def __init__(self, clique: "TwoClique"):
        words = ", ".join(str(m) for m in clique.members)
        super().__init__(f"maximal 2-clique {{{words}}} matches no template")
        self.clique = clique


@dataclass(frozen=True)
class TwoClique:
    members: tuple[Element, ...]  # ShortLex-sorted

    @classmethod
    def of(cls, elements: Iterable[Element]) -> "TwoClique":
        return cls(tuple(sorted(set(elements), key=Element.sort_key)))

    def __len__(self):
        return len(self.members)

    def key(self):
        return tuple(m.sort_key() for m in self.members)

    def translate(self, w: Element) -> "TwoClique":
        """The right translate ``C w``."""
        return TwoClique.of(m * w for m in self.members)


@dataclass(frozen=True)
class CliqueType:
    tag: str
    w: Element
    generators: tuple[int, ...]
    degenerate: bool = False  # S w = S w' with w != w' (only I2(2))

    @property
    def roman(self) -> str:
        return ROMAN[self.tag]

    def expand(self, sys: CoxeterSystem) -> frozenset[Element]:
        return template_members(sys, self.tag, self.generators, self.w)


@dataclass(frozen=True)
class ClassifiedClique:
    clique: TwoClique
    types: tuple[CliqueType, ...]

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(t.tag for t in self.types)


def template_members(sys: CoxeterSystem, tag: str, gens, w: Element) -> frozenset[Element]:
    if tag == S_COSET:
        base = [sys.gen(s) for s in range(sys.rank)]
    elif tag == COMMUTING_TRIPLE:
        a, b, c = gens
        base = [sys.gen(a), sys.gen(b), sys.gen(c), sys.element((a, b, c))]
    elif tag == BRAID:
        a, b = gens
        base = [sys.gen(a), sys.gen(b), sys.element((a, b, a))]
    else:
        raise ValueError(f"unknown clique tag {tag!r}")
    return frozenset(mul(sys, x, w) for x in base)


def is_two_clique(sys: CoxeterSystem, elements: Iterable[Element]) -> bool:
    elements = list(elements)
    return all(b in two_neighbors(sys, a) for a, b in combinations(elements, 2))


def _bron_kerbosch(nbrs: dict, r: set, p: set, x: set, out: list) -> None:
    if not p and not x:
        out.append(r)
        return
    pivot = max(p | x, key=lambda v: (len(nbrs[v] & p), v.sort_key()))
    for v in sorted(p - nbrs[pivot], key=Element.sort_key):
        _bron_kerbosch(nbrs, r | {v}, p & nbrs[v], x & nbrs[v], out)
        p = p - {v}
        x = x | {v}


def maximal_2cliques_at(sys: CoxeterSystem, u: Element) -> list[TwoClique]:
    """Every maximal 2-clique containing ``u``.

    Any element that could extend a clique through ``u`` is 2-adjacent to
    ``u``, so working inside ``two_neighbors(u)`` is exact on any group.
    """
    _check(sys, u)
    near = two_neighbors(sys, u)
    if not near:
        return []
    nbrs = {v: two_neighbors(sys, v) & near for v in near}
    found: list = []
    _bron_kerbosch(nbrs, set(), set(near), set(), found)
    return sorted((TwoClique.of(c | {u}) for c in found), key=TwoClique.key)


def classify_clique(sys: CoxeterSystem, clique: TwoClique, maximal: bool = True) -> tuple[CliqueType, ...]:
    """All templates the clique is a translate of.

    Every member ``u`` and generator ``s`` give a candidate ``w = s u``; the
    translate ``C w^{-1}`` then contains ``s`` and is matched against the
    three templates.  For each tag the ShortLex-least ``(w, generators)`` is
    reported.  Raises :class:`TheoremViolation` when ``maximal`` is set and
    nothing matches.
    """
    members = frozenset(clique.members)
    for m in members:
        _check(sys, m)
    gens = frozenset(sys.generators)
    hits: dict[str, list] = {tag: [] for tag in TAG_ORDER}
    tried = set()
    for u in clique.members:
        for s in range(sys.rank):
            w = mul_gen_left(sys, s, u)
            if w in tried:
                continue
            tried.add(w)
            w_inv = inverse(sys, w)
            shifted = {mul(sys, x, w_inv) for x in members}
            letters = sorted(d.word[0] for d in shifted if len(d.word) == 1)
            rest = [d for d in shifted if len(d.word) != 1]
            if shifted == gens:
                hits[S_COSET].append((w, tuple(range(sys.rank))))
            if len(shifted) == 4 and len(letters) == 3 and len(rest) == 1:
                a, b, c = letters
                if (sys.commute(a, b) and sys.commute(a, c) and sys.commute(b, c)
                        and rest[0] == sys.element((a, b, c))):
                    hits[COMMUTING_TRIPLE].append((w, (a, b, c)))
            if len(shifted) == 3 and len(letters) == 2 and len(rest) == 1:
                a, b = letters
                if sys.m(a, b) == 3 and rest[0] == sys.element((a, b, a)):
                    hits[BRAID].append((w, (a, b)))
    types = []
    for tag in TAG_ORDER:
        if not hits[tag]:
            continue
        w, g = min(hits[tag], key=lambda h: (h[0].sort_key(), h[1]))
        degenerate = tag == S_COSET and len({h[0] for h in hits[tag]}) > 1
        ct = CliqueType(tag, w, g, degenerate)
        if ct.expand(sys) != members:
            raise TheoremViolation(clique)  # template re-check failed
        types.append(ct)
    if maximal and not types:
        raise TheoremViolation(clique)
    return tuple(types)


def _scope_vertices(sys: CoxeterSystem, radius: int | None, budget: int):
    if radius is None:
        return full_group(sys, budget).vertices
    return generate_ball(sys, radius=radius, budget=budget).vertices


def enumerate_maximal_2cliques(sys: CoxeterSystem, radius: int | None = None,
                               budget: int = DEFAULT_BUDGET) -> list[ClassifiedClique]:
    """Classified maximal 2-cliques.

    With ``radius=None`` the scope is the whole (finite) group; otherwise the
    cliques whose ShortLex-least member has length at most ``radius``.
    """
    out = []
    for u in _scope_vertices(sys, radius, budget):
        for c in maximal_2cliques_at(sys, u):
            # each clique is reported once, from its least member
            if c.members[0] == u:
                out.append(ClassifiedClique(c, classify_clique(sys, c, maximal=True)))
    out.sort(key=lambda cc: cc.clique.key())
    return out


def count_by_type(sys: CoxeterSystem, radius: int | None = None,
                  budget: int = DEFAULT_BUDGET) -> tuple[int, int, int]:
    """Numbers of maximal 2-cliques carrying each tag (I, II, III)."""
    counts = dict.fromkeys(TAG_ORDER, 0)
    for cc in enumerate_maximal_2cliques(sys, radius, budget):
        for tag in set(cc.tags):
            counts[tag] += 1
    return counts[S_COSET], counts[COMMUTING_TRIPLE], counts[BRAID]


def clique_to_json(sys: CoxeterSystem, cc: ClassifiedClique) -> dict:
    fw = sys.format_word
    types = []
    for t in cc.types:
        entry = {
            "tag": t.tag,
            "w": fw(t.w.word),
            "generators": [sys.names[g] for g in t.generators],
        }
        if t.degenerate:
            entry["degenerate"] = True
        types.append(entry)
    return {"members": [fw(m.word) for m in cc.clique.members], "types": types}


def clique_from_json(sys: CoxeterSystem, data: dict) -> TwoClique:
    return TwoClique.of(sys.parse_word(w) for w in data["members"])
