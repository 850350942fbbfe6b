"""Lie bracket expressions, bracketings of words, and integer linear combinations.

Expressions are compared structurally: ``[a,b]`` and ``[b,a]`` are different
expressions. Identification modulo antisymmetry and Jacobi happens only
through the pairing and projection.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import NotLyndon, ParseError
from .partition import Leaf, Node, PartitionTree, full_partition
from .words import Alphabet, WordLike, _alphabet, is_lyndon


class LieExpr:
    """Base class. Equality and hashing go through the canonical printed form."""

    @cached_property
    def text(self) -> str:
        raise NotImplementedError

    @property
    def degree(self) -> int:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"LieExpr({self.text!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LieExpr) and self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    @cached_property
    def letters(self) -> str:
        """Leaf letters left to right; position ``i`` (1-based) is ``letters[i-1]``."""
        return "".join(c for c in self.text if c not in "[],")

    @cached_property
    def content(self) -> tuple[str, ...]:
        return tuple(sorted(self.letters))


class Letter(LieExpr):
    def __init__(self, letter: str):
        if len(letter) != 1 or letter in "[], \t\n":
            raise ParseError(f"invalid letter {letter!r}")
        self.letter = letter

    @cached_property
    def text(self) -> str:
        return self.letter

    @property
    def degree(self) -> int:
        return 1


class Bracket(LieExpr):
    def __init__(self, left: LieExpr, right: LieExpr):
        self.left = left
        self.right = right

    @cached_property
    def text(self) -> str:
        return f"[{self.left.text},{self.right.text}]"

    @cached_property
    def degree(self) -> int:
        return self.left.degree + self.right.degree


def bracket(x: LieExpr | str, y: LieExpr | str) -> Bracket:
    return Bracket(_coerce(x), _coerce(y))


def _coerce(x: LieExpr | str) -> LieExpr:
    return x if isinstance(x, LieExpr) else parse_expr(x)


def spans(e: LieExpr) -> list[tuple[int, int, int]]:
    """``(lo, mid, hi)`` for every bracket, 0-based half-open, post-order.

    The left factor covers positions ``lo..mid-1``, the right ``mid..hi-1``.
    Post-order means spans are sorted by ``hi`` with inner brackets first.
    """
    out: list[tuple[int, int, int]] = []

    def walk(node: LieExpr, lo: int) -> int:
        if isinstance(node, Letter):
            return lo + 1
        mid = walk(node.left, lo)
        hi = walk(node.right, mid)
        out.append((lo, mid, hi))
        return hi

    walk(e, 0)
    return out


def subexpressions(e: LieExpr) -> Iterator[LieExpr]:
    yield e
    if isinstance(e, Bracket):
        yield from subexpressions(e.left)
        yield from subexpressions(e.right)


# ---------------------------------------------------------------- parsing


def parse_expr(text: str) -> LieExpr:
    """Parse ``expr := letter | '[' expr ',' expr ']'``; whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty expression")
    pos = 0

    def expr() -> LieExpr:
        nonlocal pos
        if pos >= len(s):
            raise ParseError(f"unexpected end of expression in {text!r}")
        c = s[pos]
        if c == "[":
            pos += 1
            left = expr()
            expect(",")
            right = expr()
            expect("]")
            return Bracket(left, right)
        if c in "],":
            raise ParseError(f"unexpected {c!r} at offset {pos} in {text!r}")
        pos += 1
        return Letter(c)

    def expect(c: str) -> None:
        nonlocal pos
        if pos >= len(s) or s[pos] != c:
            found = s[pos] if pos < len(s) else "end of input"
            raise ParseError(f"expected {c!r} at offset {pos} in {text!r}, found {found!r}")
        pos += 1

    e = expr()
    if pos != len(s):
        raise ParseError(f"trailing input {s[pos:]!r} in {text!r}")
    return e


def expr_to_json(e: LieExpr):
    """Letters as strings, brackets as two-element lists."""
    if isinstance(e, Letter):
        return e.letter
    return [expr_to_json(e.left), expr_to_json(e.right)]


def expr_from_json(data) -> LieExpr:
    if isinstance(data, dict):
        if data.get("format", 1) != 1:
            raise ParseError(f"unsupported expression format {data.get('format')!r}")
        data = data.get("expr")
    if isinstance(data, str):
        return Letter(data)
    if isinstance(data, list) and len(data) == 2:
        return Bracket(expr_from_json(data[0]), expr_from_json(data[1]))
    raise ParseError(f"bad JSON expression {data!r}")


# ---------------------------------------------------------------- bracketings


def left_greedy_bracket(t: PartitionTree | WordLike) -> LieExpr:
    """Right-normed bracketing along each level of the full partition.

    Accepts a partition tree or a word (which is fully partitioned first).
    """
    if not isinstance(t, (Leaf, Node)):
        t = full_partition(t)
    return _left_greedy(t)


@lru_cache(maxsize=4096)
def _left_greedy(t: PartitionTree) -> LieExpr:
    if isinstance(t, Leaf):
        return Letter(t.letter)
    base = _left_greedy(t.base)
    out = _left_greedy(t.anchor)
    for _ in range(t.exponent):
        out = Bracket(base, out)
    return out


def standard_bracket(w: WordLike, alphabet: Alphabet | str | None = None) -> LieExpr:
    """Standard bracketing: split off the longest proper Lyndon suffix and recurse."""
    s = str(w)
    alpha = _alphabet(alphabet if alphabet is not None else getattr(w, "alphabet", None), s)
    if not is_lyndon(s, alpha):
        raise NotLyndon(f"{s!r} is not a Lyndon-Shirshov word")
    return _standard(s, alpha)


def _standard(s: str, alpha: Alphabet) -> LieExpr:
    if len(s) == 1:
        return Letter(s)
    for i in range(1, len(s)):
        if is_lyndon(s[i:], alpha):
            return Bracket(_standard(s[:i], alpha), _standard(s[i:], alpha))
    raise AssertionError("unreachable: the last letter is always Lyndon")


# ---------------------------------------------------------------- associative expansion


AssocPoly = dict[str, int]


def assoc_expand(e: LieExpr) -> AssocPoly:
    """Expand under ``[X, Y] -> XY - YX``; zero coefficients are dropped."""
    return dict(_assoc(e))


@lru_cache(maxsize=8192)
def _assoc(e: LieExpr) -> tuple[tuple[str, int], ...]:
    if isinstance(e, Letter):
        return ((e.letter, 1),)
    left, right = _assoc(e.left), _assoc(e.right)
    acc: Counter = Counter()
    for u, cu in left:
        for v, cv in right:
            acc[u + v] += cu * cv
            acc[v + u] -= cu * cv
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def poly_add(p: Mapping[str, int], q: Mapping[str, int], k: int = 1) -> AssocPoly:
    out = dict(p)
    for w, c in q.items():
        v = out.get(w, 0) + k * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


# ---------------------------------------------------------------- linear combinations


class LieCombo:
    """Formal integer combination of bracket expressions (no Lie identities applied)."""

    def __init__(self, terms: Mapping[LieExpr, int] | Iterable[tuple[LieExpr, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LieExpr, int] = {}
        for e, c in items:
            e = _coerce(e)
            acc[e] = acc.get(e, 0) + int(c)
        self.terms: dict[LieExpr, int] = {e: c for e, c in acc.items() if c}

    @classmethod
    def single(cls, e: LieExpr | str, k: int = 1) -> "LieCombo":
        return cls([(_coerce(e), k)])

    def __add__(self, other: "LieCombo") -> "LieCombo":
        return LieCombo(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "LieCombo") -> "LieCombo":
        return self + other.scale(-1)

    def __neg__(self) -> "LieCombo":
        return self.scale(-1)

    def scale(self, k: int) -> "LieCombo":
        return LieCombo({e: k * c for e, c in self.terms.items()})

    __rmul__ = scale

    def map(self, f) -> "LieCombo":
        """Apply an expression-level map termwise (e.g. wrap in a bracket)."""
        return LieCombo([(f(e), c) for e, c in self.terms.items()])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LieCombo) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[LieExpr, int]]:
        return sorted(self.terms.items(), key=lambda ec: (ec[0].degree, ec[0].text))

    def __str__(self) -> str:
        return format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"LieCombo({str(self)!r})"

    def assoc_expand(self) -> AssocPoly:
        out: AssocPoly = {}
        for e, c in self.terms.items():
            out = poly_add(out, _assoc_dict(e), c)
        return out


def _assoc_dict(e: LieExpr) -> dict[str, int]:
    return dict(_assoc(e))


def combo_add(c1: LieCombo, c2: LieCombo) -> LieCombo:
    return c1 + c2


def combo_scale(c: LieCombo, k: int) -> LieCombo:
    return c.scale(k)


def format_terms(terms: Iterable[tuple[object, int]]) -> str:
    """``+1*[a,b] -2*[[a,b],b]``; an empty sum prints ``0``."""
    parts = [f"{'+' if c > 0 else '-'}{abs(c)}*{e}" for e, c in terms]
    return " ".join(parts) if parts else "0"


def parse_combo(text: str) -> LieCombo:
    """Inverse of :func:`format_terms`. A bare expression means coefficient 1."""
    s = "".join(text.split())
    if s == "0":
        return LieCombo()
    terms: list[tuple[LieExpr, int]] = []
    i = 0
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j > i and j < len(s) and s[j] == "*":
            k = int(s[i:j])
            i = j + 1
        else:
            k = 1
        depth, j = 0, i
        while j < len(s):
            if s[j] == "[":
                depth += 1
            elif s[j] == "]":
                depth -= 1
            if depth == 0:
                j += 1
                break
            j += 1
        terms.append((parse_expr(s[i:j]), sign * k))
        i = j
    return LieCombo(terms)


# ---------------------------------------------------------------- random expressions


def random_shape(letters: str, rng: random.Random) -> LieExpr:
    """Uniformly split points, leaves taken from ``letters`` in order."""
    if len(letters) == 1:
        return Letter(letters)
    k = rng.randint(1, len(letters) - 1)
    return Bracket(random_shape(letters[:k], rng), random_shape(letters[k:], rng))


def random_expr(
    degree: int,
    rng: random.Random | int | None = None,
    alphabet: Alphabet | str = "ab",
    content: str | None = None,
) -> LieExpr:
    """Random bracket shape with random letters, or a shuffle of ``content``."""
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    alpha = _alphabet(alphabet)
    if content is not None:
        letters = list(content)
        rng.shuffle(letters)
    else:
        letters = [rng.choice(alpha.letters) for _ in range(degree)]
    return random_shape("".join(letters), rng)


def anticommutativity(x: LieExpr, y: LieExpr) -> LieCombo:
    return LieCombo([(Bracket(x, y), 1), (Bracket(y, x), 1)])


def jacobi(x: LieExpr, y: LieExpr, z: LieExpr) -> LieCombo:
    return LieCombo(
        [
            (Bracket(x, Bracket(y, z)), 1),
            (Bracket(z, Bracket(x, y)), 1),
            (Bracket(y, Bracket(z, x)), 1),
        ]
    )


def random_relation(
    degree: int,
    seed: random.Random | int | None = None,
    alphabet: Alphabet | str = "ab",
    kind: str | None = None,
) -> LieCombo:
    """A combination that vanishes in the free Lie algebra.

    An antisymmetry or Jacobi instance on random sub-expressions, wrapped in a
    random number of enclosing brackets on either side. ``kind`` forces
    ``"as"`` or ``"jacobi"``.
    """
    if degree < 2:
        raise ValueError("relations need degree >= 2")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    alpha = _alphabet(alphabet)
    if kind is None:
        kind = "as" if degree == 2 else rng.choice(["as", "jacobi"])
    if kind == "jacobi" and degree < 3:
        raise ValueError("Jacobi relations need degree >= 3")
    parts = 2 if kind == "as" else 3
    core = rng.randint(parts, degree)
    cuts = sorted(rng.sample(range(1, core), parts - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [core])]
    factors = [random_expr(n, rng, alpha) for n in sizes]
    rel = anticommutativity(*factors) if kind == "as" else jacobi(*factors)
    remaining = degree - core
    while remaining:
        n = rng.randint(1, remaining)
        w = random_expr(n, rng, alpha)
        if rng.random() < 0.5:
            rel = rel.map(lambda e, w=w: Bracket(w, e))
        else:
            rel = rel.map(lambda e, w=w: Bracket(e, w))
        remaining -= n
    return rel


# Chibrikov's bracketing of aababb; stored for comparison, not computed.
CHIBRIKOV_AABABB = "[[a,[a,b]],[[a,b],b]]"


__all__ = [
    "LieExpr",
    "Letter",
    "Bracket",
    "LieCombo",
    "AssocPoly",
    "bracket",
    "parse_expr",
    "parse_combo",
    "format_terms",
    "expr_to_json",
    "expr_from_json",
    "left_greedy_bracket",
    "standard_bracket",
    "assoc_expand",
    "combo_add",
    "combo_scale",
    "random_expr",
    "random_relation",
    "anticommutativity",
    "jacobi",
    "spans",
]
