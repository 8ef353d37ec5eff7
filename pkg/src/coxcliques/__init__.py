"""Coxeter group word problem, Cayley graphs and maximal 2-cliques."""

from .coxeter import (
    CoxeterError,
    CoxeterSystem,
    Element,
    ParseError,
    braid_element,
    distance,
    exchange_index,
    inverse,
    is_left_descent,
    length,
    mul,
    mul_gen_left,
    parse_system,
    support,
)
from .cayley import Ball, BudgetExceeded, HalfGraph, full_group, generate_ball, parity_split, two_neighbors
from .cliques import (
    ClassifiedClique,
    CliqueType,
    TheoremViolation,
    TwoClique,
    classify_clique,
    count_by_type,
    enumerate_maximal_2cliques,
    maximal_2cliques_at,
)
from .halfauto import (
    CayleyAutomorphism,
    NotExtendable,
    VertexMap,
    builtin_automorphism,
    decompose_distance2_bijection,
    extend_half_automorphism,
)

__version__ = "0.1.0"
