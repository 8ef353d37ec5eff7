"""Root vectors of the geometric representation.

A root vector is a tuple of field elements giving coordinates over the simple
roots.  ``B(a_s, a_t) = -cos(pi / m(s, t))`` with ``B = -1`` for ``m = inf``.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldElement, ZERO, two_cos_pi_over

RootVector = tuple  # tuple[FieldElement, ...]


def twice_form(matrix: Sequence[Sequence]) -> tuple[tuple[FieldElement, ...], ...]:
    """The matrix of ``2B(a_s, a_t)``."""
    return tuple(tuple(-two_cos_pi_over(m) for m in row) for row in matrix)


def form(twice_b, u: RootVector, v: RootVector) -> FieldElement:
    total = ZERO
    for i, ui in enumerate(u):
        if ui.is_zero():
            continue
        for j, vj in enumerate(v):
            if not vj.is_zero():
                total = total + ui * vj * twice_b[i][j]
    return total / 2


def simple_root(rank: int, s: int) -> RootVector:
    one = FieldElement.rational(1)
    return tuple(one if i == s else ZERO for i in range(rank))


def reflect(twice_b, s: int, v: RootVector) -> RootVector:
    """sigma_s(v) = v - 2B(a_s, v) a_s; only coordinate s moves."""
    row = twice_b[s]
    shift = ZERO
    for t, vt in enumerate(v):
        if not vt.is_zero() and not row[t].is_zero():
            shift = shift + row[t] * vt
    if shift.is_zero():
        return v
    out = list(v)
    out[s] = v[s] - shift
    return tuple(out)


def root_sign(v: RootVector) -> int:
    """Sign of the first nonzero coordinate (roots are sign-coherent)."""
    for x in v:
        s = x.sign()
        if s:
            return s
    return 0


def is_sign_coherent(v: RootVector) -> bool:
    signs = {x.sign() for x in v} - {0}
    return len(signs) <= 1
