import random

import pytest

from coxcliques.cayley import full_group, two_neighbors
from coxcliques.coxeter import CoxeterError, mul, mul_gen_left, parse_preset
from coxcliques.halfauto import (
    CayleyAutomorphism,
    NotExtendable,
    PreconditionError,
    VertexMap,
    builtin_automorphism,
    compose,
    decompose_distance2_bijection,
    diagram_automorphism,
    extend_half_automorphism,
    half_graph_automorphisms,
    is_cayley_automorphism,
    map_from_json,
    map_to_json,
    patched_map,
    preserves_distance_two,
    right_multiplication,
    type_breaking_witness,
)

from conftest import group, system

REVERSAL = (4, 3, 2, 1, 0)


def test_rw_identity():
    W = system("A3")
    f = builtin_automorphism(W, "Rw", W.identity(), group("A3"))
    assert all(f(w) == w for w in group("A3").vertices)


def test_diagram_reversal_fixes_identity():
    W = system("A3")
    f = builtin_automorphism(W, "diagram", (2, 1, 0), group("A3"))
    assert f(W.identity()) == W.identity()
    assert f(W.gen(0)) == W.gen(2)
    with pytest.raises(CoxeterError):
        diagram_automorphism(system("B3"), (2, 1, 0), group("B3"))


def test_rs_swaps_parity_classes():
    W = system("I2(2)")
    f = right_multiplication(W, W.gen(0), group("I2(2)"))
    assert all(f(w).parity != w.parity for w in group("I2(2)").vertices)


def test_extension_of_rw_on_a5():
    W, G = system("A5"), group("A5")
    w = W.element((0, 1, 3, 2))
    R = right_multiplication(W, w, G)
    ext = extend_half_automorphism(W, R.restrict(1), G)
    assert ext.same_map(R) and ext.provenance == "extension"


def test_extension_of_identity():
    W, G = system("A5"), group("A5")
    ident = VertexMap(W, 1, 1, {w: w for w in G.vertices if w.parity == 1})
    ext = extend_half_automorphism(W, ident, G)
    assert all(ext(w) == w for w in G.vertices)


def test_extension_from_even_class_and_odd_shift():
    W, G = system("A5"), group("A5")
    f = compose(diagram_automorphism(W, REVERSAL, G), right_multiplication(W, W.gen(2), G))
    for parity in (1, 2):
        half = f.restrict(parity)
        assert half.target_parity != parity
        assert extend_half_automorphism(W, half, G).same_map(f)


def test_extension_needs_rank_five():
    W, G = system("A4"), group("A4")
    R = right_multiplication(W, W.identity(), G)
    with pytest.raises(PreconditionError):
        extend_half_automorphism(W, R.restrict(1), G)
    # the check can be lifted; R_w still extends uniquely at rank 4
    assert extend_half_automorphism(W, R.restrict(1), G, enforce_rank=False).same_map(R)


def test_non_isomorphism_rejected():
    W, G = system("A5"), group("A5")
    odd = [w for w in G.vertices if w.parity == 1]
    swapped = {w: w for w in odd}
    swapped[odd[0]], swapped[odd[1]] = odd[1], odd[0]
    with pytest.raises(PreconditionError):
        extend_half_automorphism(W, VertexMap(W, 1, 1, swapped), G)


def test_half_cube_witness():
    W, G = system("hypercube4"), group("hypercube4")
    autos = list(half_graph_automorphisms(W, 1, G))
    assert len(autos) == 384  # cocktail party graph K_{4x2}: 4! * 2^4
    f = type_breaking_witness(W, 1, G)
    breaking = [
        a for a in autos
        if any(not _is_coset(W, {a.mapping[mul_gen_left(W, s, w)] for s in range(4)})
               for w in G.vertices if w.parity == 2)
    ]
    assert f.mapping == breaking[0].mapping
    assert map_to_json(W, f.mapping)[3] == ["s4", "s1 s2 s3"]
    with pytest.raises(NotExtendable, match="type II"):
        extend_half_automorphism(W, f, G, enforce_rank=False)


def _is_coset(W, image):
    return any({mul_gen_left(W, s, c) for s in range(W.rank)} == image
               for c in {mul_gen_left(W, t, x) for x in image for t in range(W.rank)})


def test_extension_unique_vertex_over_coset():
    """The only vertex adjacent to every element of S w is w (|S| >= 3)."""
    for name in ("A3", "A5", "hypercube4"):
        W, G = system(name), group(name)
        for w in G.vertices:
            coset = {mul_gen_left(W, s, w) for s in range(W.rank)}
            common = set.intersection(*({mul_gen_left(W, s, x) for s in range(W.rank)} for x in coset))
            assert common == {w}


@pytest.mark.parametrize("seed", range(3))
def test_extension_idempotent(seed):
    W, G = system("A5"), group("A5")
    rng = random.Random(seed)
    w = rng.choice([v for v in G.vertices if v.parity == 2])
    f = right_multiplication(W, w, G)
    if seed % 2:
        f = compose(diagram_automorphism(W, REVERSAL, G), f)
    half = f.restrict(1)
    # graph isomorphisms preserve clique sizes, so S-cosets (size 5) go to S-cosets
    a = extend_half_automorphism(W, half, G)
    b = extend_half_automorphism(W, half, G)
    assert a.same_map(f) and a.same_map(b)


def test_decompose_rw():
    W, G = system("A5"), group("A5")
    R = right_multiplication(W, W.element((0, 2)), G)
    d = decompose_distance2_bijection(W, R.mapping, G)
    assert not d.swapped and d.is_automorphism and d.f1.same_map(R)


def test_decompose_patched():
    W, G = system("A5"), group("A5")
    R1 = right_multiplication(W, W.element((0, 2)), G)
    R2 = right_multiplication(W, W.element((1, 3, 2, 4)), G)
    g = patched_map(R1, R2, G)
    assert preserves_distance_two(W, g, G)
    assert not is_cayley_automorphism(W, g, G)
    d = decompose_distance2_bijection(W, g, G)
    assert d.f1.same_map(R1) and d.f2.same_map(R2)
    assert not d.swapped and not d.is_automorphism


def test_decompose_swap():
    W, G = system("A5"), group("A5")
    R = right_multiplication(W, W.gen(3), G)
    d = decompose_distance2_bijection(W, R.mapping, G)
    assert d.swapped and d.is_automorphism


def test_decompose_rejects_non_distance_two_map():
    W, G = system("A5"), group("A5")
    g = {w: w for w in G.vertices}
    a, b = G.vertices[1], G.vertices[2]
    g[a], g[b] = b, a
    with pytest.raises(PreconditionError):
        decompose_distance2_bijection(W, g, G)
    with pytest.raises(PreconditionError):
        decompose_distance2_bijection(system("A4"), {w: w for w in group("A4").vertices}, group("A4"))


def test_map_json_round_trip():
    W, G = system("A3"), group("A3")
    R = right_multiplication(W, W.gen(1), G)
    data = map_to_json(W, R.mapping)
    assert data[0] == ["e", "s2"]
    assert [p[0] for p in data] == [W.format_word(v.word) for v in G.vertices]
    assert map_from_json(W, data) == R.mapping
