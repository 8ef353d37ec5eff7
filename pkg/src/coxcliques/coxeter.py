"""Coxeter systems and the word problem.

Group elements are represented by their ShortLex-canonical reduced word (the
lexicographically least reduced expression), so equality of elements is
equality of words.  Left descents are decided in the geometric
representation: ``s`` is a left descent of ``w`` iff ``w^{-1}(a_s)`` is a
negative root.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .roots import RootVector, reflect, root_sign, simple_root, twice_form

INF = math.inf
SUPPORTED_LABELS = (2, 3, 4, 5, 6, INF)


class CoxeterError(ValueError):
    """Invalid Coxeter data or a violated operation precondition."""


class ParseError(CoxeterError):
    pass


def _label_str(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    """A validated Coxeter matrix with generator names.

    Instances also carry the memo tables of the word engine; those are
    behaviourally invisible.
    """

    matrix: tuple[tuple, ...]
    names: tuple[str, ...]
    name: str = "W"
    _cols: dict = field(default_factory=dict, init=False, repr=False)
    _word_of: dict = field(default_factory=dict, init=False, repr=False)
    _left: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        n = len(self.matrix)
        if n < 1:
            raise CoxeterError("rank must be at least 1")
        if len(self.names) != n or len(set(self.names)) != n:
            raise CoxeterError("generator names must be distinct, one per row")
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise CoxeterError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, m in enumerate(row):
                if i == j:
                    if m != 1:
                        raise CoxeterError(f"diagonal entry ({i + 1},{i + 1}) = {_label_str(m)}, must be 1")
                elif m not in SUPPORTED_LABELS:
                    raise CoxeterError(
                        f"entry ({i + 1},{j + 1}) = {_label_str(m)}: label not in {{2,...,6,inf}}"
                    )
                elif self.matrix[j][i] != m:
                    raise CoxeterError(
                        f"asymmetric entries ({i + 1},{j + 1}) = {_label_str(m)} "
                        f"and ({j + 1},{i + 1}) = {_label_str(self.matrix[j][i])}"
                    )
        object.__setattr__(self, "_twice_b", twice_form(self.matrix))
        ident = tuple(simple_root(n, s) for s in range(n))
        self._cols[()] = ident
        self._word_of[ident] = ()

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def m(self, s: int, t: int):
        return self.matrix[s][t]

    def commute(self, s: int, t: int) -> bool:
        return self.matrix[s][t] <= 2

    @property
    def twice_form(self):
        return self._twice_b

    def _key(self):
        return (self.name, self.names, self.matrix)

    def __eq__(self, other):
        if not isinstance(other, CoxeterSystem):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # elements

    def identity(self) -> "Element":
        return Element(self, ())

    def gen(self, s: int) -> "Element":
        return Element(self, (s,))

    @property
    def generators(self) -> list["Element"]:
        return [self.gen(s) for s in range(self.rank)]

    def element(self, word: Iterable[int]) -> "Element":
        """The element represented by an arbitrary (possibly unreduced) word."""
        x = ()
        for s in reversed(tuple(word)):
            if not 0 <= s < self.rank:
                raise CoxeterError(f"generator index {s} out of range")
            x = self._mul_gen(s, x)
        return Element(self, x)

    def parse_word(self, text: str) -> "Element":
        """Parse space-separated generator names; ``e`` is the identity."""
        tokens = text.split()
        if tokens == ["e"] or not tokens:
            return self.identity()
        index = {nm: i for i, nm in enumerate(self.names)}
        try:
            return self.element(index[t] for t in tokens)
        except KeyError as exc:
            raise ParseError(f"unknown generator {exc.args[0]!r}") from None

    def format_word(self, word: Sequence[int]) -> str:
        return " ".join(self.names[s] for s in word) if word else "e"

    # word engine

    def _columns(self, word: tuple) -> tuple[RootVector, ...]:
        """``w^{-1}(a_t)`` for every generator t, for a canonical word."""
        cols = self._cols.get(word)
        if cols is None:
            # canonical words are registered on creation; this path only
            # handles words that were never produced by the engine
            x = ()
            for s in reversed(word):
                x = self._mul_gen(s, x)
            if x != word:
                raise CoxeterError(f"word {word} is not canonical")
            cols = self._cols[word]
        return cols

    def _act(self, s: int, cols):
        """Columns of ``s x`` from the columns of ``x``."""
        row = self._twice_b[s]
        cs = cols[s]
        out = []
        for t, ct in enumerate(cols):
            if t == s:
                out.append(tuple(-x for x in cs))
            elif row[t].is_zero():
                out.append(ct)
            else:
                c = row[t]
                out.append(tuple(a - c * b for a, b in zip(ct, cs)))
        return tuple(out)

    def _first_descent(self, cols) -> int:
        for t, ct in enumerate(cols):
            if root_sign(ct) < 0:
                return t
        return -1

    def _canonical(self, cols) -> tuple:
        word = self._word_of.get(cols)
        if word is not None:
            return word
        path = []
        cur = cols
        while word is None:
            t = self._first_descent(cur)
            if t < 0:
                raise CoxeterError("non-identity element without a left descent")
            path.append((t, cur))
            cur = self._act(t, cur)
            word = self._word_of.get(cur)
        for t, c in reversed(path):
            word = (t,) + word
            self._word_of[c] = word
            self._cols[word] = c
        return word

    def _mul_gen(self, s: int, word: tuple) -> tuple:
        key = (s, word)
        out = self._left.get(key)
        if out is None:
            out = self._canonical(self._act(s, self._columns(word)))
            self._left[key] = out
        return out


@dataclass(frozen=True, eq=False)
class Element:
    """A group element, held as its canonical reduced word."""

    system: CoxeterSystem
    word: tuple[int, ...]

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def parity(self) -> int:
        """1 for odd length (W1), 2 for even length (W2)."""
        return 1 if len(self.word) % 2 else 2

    def sort_key(self):
        return (len(self.word), self.word)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.word == other.word and (self.system is other.system or self.system == other.system)

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other: "Element"):
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Element"):
        return self.sort_key() <= other.sort_key()

    def __mul__(self, other: "Element") -> "Element":
        return mul(self.system, self, other)

    def __str__(self):
        return self.system.format_word(self.word)

    def __repr__(self):
        return f"Element({self.system.name}: {self})"


def _check(sys: CoxeterSystem, *elements: Element) -> None:
    for w in elements:
        if w.system is not sys and w.system != sys:
            raise CoxeterError(
                f"element of system {w.system.name} (rank {w.system.rank}) "
                f"used with system {sys.name} (rank {sys.rank})"
            )


def _check_gen(sys: CoxeterSystem, s: int) -> None:
    if not 0 <= s < sys.rank:
        raise CoxeterError(f"generator index {s} out of range for rank {sys.rank}")


# presets

def _path(n: int, labels: dict | None = None) -> list[list]:
    mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m = (labels or {}).get(i, 3)
        mat[i][i + 1] = mat[i + 1][i] = m
    return mat


def _set(mat, i, j, m):
    mat[i][j] = mat[j][i] = m


def _preset_matrix(token: str) -> list[list]:
    t = token.strip()
    if m := re.fullmatch(r"A(\d+)", t):
        n = int(m[1])
        if n < 1:
            raise ParseError("A_n needs n >= 1")
        return _path(n)
    if m := re.fullmatch(r"[BC](\d+)", t):
        n = int(m[1])
        if n < 2:
            raise ParseError("B_n needs n >= 2")
        return _path(n, {n - 2: 4})
    if m := re.fullmatch(r"D(\d+)", t):
        n = int(m[1])
        if n < 2:
            raise ParseError("D_n needs n >= 2")
        mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            _set(mat, i, i + 1, 3)
        if n >= 3:
            _set(mat, n - 1, n - 3, 3)
        return mat
    if t == "F4":
        return _path(4, {1: 4})
    if m := re.fullmatch(r"H([34])", t):
        return _path(int(m[1]), {0: 5})
    if m := re.fullmatch(r"I2\((\d+|inf|∞)\)", t):
        lab = INF if m[1] in ("inf", "∞") else int(m[1])
        if lab not in SUPPORTED_LABELS:
            raise ParseError(f"I2({m[1]}): label {m[1]} not in {{2,...,6,inf}}")
        return [[1, lab], [lab, 1]]
    if m := re.fullmatch(r"(?:Atilde|~A)(\d+)", t):
        n = int(m[1])
        if n < 1:
            raise ParseError("Atilde_n needs n >= 1")
        if n == 1:
            return [[1, INF], [INF, 1]]
        mat = _path(n + 1)
        _set(mat, 0, n, 3)
        return mat
    if m := re.fullmatch(r"hypercube(\d+)", t):
        n = int(m[1])
        if n < 1:
            raise ParseError("hypercube_n needs n >= 1")
        return [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    if m := re.fullmatch(r"U(\d+)", t):
        n = int(m[1])
        if n < 1:
            raise ParseError("U_n needs n >= 1")
        return [[1 if i == j else INF for j in range(n)] for i in range(n)]
    raise ParseError(f"unknown preset {t!r}")


def _block(blocks: list[list[list]], off) -> list[list]:
    n = sum(len(b) for b in blocks)
    mat = [[off] * n for _ in range(n)]
    base = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                mat[base + i][base + j] = b[i][j]
        base += k
    for i in range(n):
        mat[i][i] = 1
    return mat


PRESET_HELP = [
    ("A<n>", "type A_n, n >= 1 (symmetric group S_{n+1})"),
    ("B<n>", "type B_n = C_n, n >= 2 (last edge labelled 4)"),
    ("D<n>", "type D_n, n >= 2 (fork at the node s_{n-2})"),
    ("F4", "type F_4"),
    ("H3, H4", "types H_3, H_4 (first edge labelled 5)"),
    ("I2(m)", "dihedral group of order 2m, m in 2..6 or inf"),
    ("Atilde<n>", "affine type A~_n (cycle of n+1 nodes; A~1 has label inf)"),
    ("hypercube<n>", "n mutually commuting involutions"),
    ("U<n>", "universal system: all labels inf"),
    ("PxQ", "direct product (block diagonal, off-block label 2)"),
    ("P*Q", "free product (off-block label inf)"),
]


def parse_preset(name: str) -> CoxeterSystem:
    """Parse a preset name; ``x`` builds direct products, ``*`` free products."""
    name = name.strip()
    free_parts = name.split("*")
    free_blocks = []
    for part in free_parts:
        direct = [_preset_matrix(tok) for tok in part.split("x")]
        free_blocks.append(_block(direct, 2) if len(direct) > 1 else direct[0])
    mat = _block(free_blocks, INF) if len(free_blocks) > 1 else free_blocks[0]
    n = len(mat)
    return CoxeterSystem(
        tuple(tuple(r) for r in mat), tuple(f"s{i + 1}" for i in range(n)), name
    )


def parse_diagram(text: str, name: str = "diagram") -> CoxeterSystem:
    """Parse the diagram file format: rank on line 1, then ``i j m`` lines."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(k + 1, ln) for k, ln in enumerate(lines) if ln]
    if not lines:
        raise ParseError("empty diagram")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"line {lineno}: rank {first!r} is not an integer") from None
    if n < 1:
        raise ParseError(f"line {lineno}: rank must be >= 1")
    mat: list[list] = [[1 if i == j else None for j in range(n)] for i in range(n)]
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'i j m', got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad generator index in {ln!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"line {lineno}: generator index out of range 1..{n}")
        lab_s = parts[2]
        if lab_s in ("inf", "∞"):
            lab = INF
        else:
            try:
                lab = int(lab_s)
            except ValueError:
                raise ParseError(f"line {lineno}: bad label {lab_s!r}") from None
        if i == j:
            if lab != 1:
                raise ParseError(f"line {lineno}: diagonal entry ({i},{i}) = {lab_s}, must be 1")
            continue
        if lab not in SUPPORTED_LABELS:
            raise ParseError(f"line {lineno}: entry ({i},{j}) label {lab_s} unsupported (allowed 2..6, inf)")
        for a, b in ((i, j), (j, i)):
            prev = mat[a - 1][b - 1]
            if prev is not None and prev != lab:
                raise ParseError(
                    f"line {lineno}: asymmetric entry ({a},{b}): {_label_str(prev)} vs {lab_s}"
                )
            mat[a - 1][b - 1] = lab
    mat = [[2 if m is None else m for m in row] for row in mat]
    return CoxeterSystem(tuple(tuple(r) for r in mat), tuple(f"s{i + 1}" for i in range(n)), name)


def parse_system(source: str) -> CoxeterSystem:
    """Build a system from a preset name or from diagram-file text."""
    stripped = source.strip()
    if "\n" in source or stripped[:1].isdigit():
        return parse_diagram(source)
    return parse_preset(stripped)


# operations

def is_left_descent(sys: CoxeterSystem, s: int, w: Element) -> bool:
    _check(sys, w)
    _check_gen(sys, s)
    return root_sign(sys._columns(w.word)[s]) < 0


def descent_root(sys: CoxeterSystem, w: Element, s: int) -> RootVector:
    """``w^{-1}(a_s)`` by applying the letter reflections one at a time."""
    v = simple_root(sys.rank, s)
    for letter in w.word:
        v = reflect(sys.twice_form, letter, v)
    return v


def left_descents(sys: CoxeterSystem, w: Element) -> list[int]:
    cols = sys._columns(w.word)
    return [s for s in range(sys.rank) if root_sign(cols[s]) < 0]


def mul_gen_left(sys: CoxeterSystem, s: int, w: Element) -> Element:
    _check(sys, w)
    _check_gen(sys, s)
    return Element(sys, sys._mul_gen(s, w.word))


def mul(sys: CoxeterSystem, w: Element, v: Element) -> Element:
    _check(sys, w, v)
    x = v.word
    for s in reversed(w.word):
        x = sys._mul_gen(s, x)
    return Element(sys, x)


def inverse(sys: CoxeterSystem, w: Element) -> Element:
    _check(sys, w)
    x = ()
    for s in w.word:
        x = sys._mul_gen(s, x)
    return Element(sys, x)


def length(sys: CoxeterSystem, w: Element) -> int:
    _check(sys, w)
    return len(w.word)


def distance(sys: CoxeterSystem, w: Element, v: Element) -> int:
    """d(w, v) = l(w v^{-1})."""
    return len(mul(sys, w, inverse(sys, v)).word)


def exchange_index(sys: CoxeterSystem, word: Sequence[int], s: int) -> int:
    """Smallest 1-based k with ``s w = s_1 ... (s_k omitted) ... s_m``."""
    word = tuple(word)
    w = sys.element(word)
    if len(w.word) != len(word):
        raise CoxeterError(f"word {sys.format_word(word)} is not reduced")
    if not is_left_descent(sys, s, w):
        raise CoxeterError(f"{sys.names[s]} is not a left descent of {sys.format_word(word)}")
    target = mul_gen_left(sys, s, w)
    for k in range(len(word)):
        if sys.element(word[:k] + word[k + 1:]) == target:
            return k + 1
    raise CoxeterError("exchange condition failed")  # unreachable for a Coxeter system


def support(sys: CoxeterSystem, w: Element) -> frozenset[int]:
    _check(sys, w)
    return frozenset(w.word)


def braid_element(sys: CoxeterSystem, s: int, t: int) -> Element:
    """w(s, t) = s t s = t s t for an unlabelled edge (m = 3)."""
    _check_gen(sys, s)
    _check_gen(sys, t)
    if s == t or sys.m(s, t) != 3:
        raise CoxeterError(
            f"braid element needs m({sys.names[s]},{sys.names[t]}) = 3, got {_label_str(sys.m(s, t))}"
        )
    return sys.element((s, t, s))
