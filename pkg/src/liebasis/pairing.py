"""Configuration pairing between labeled digraphs and Lie bracket expressions.

Three evaluators:

``pair_sigma`` / ``bijections``
    the definition, one bijection at a time (slow, used as the reference);
``pair_bruteforce``
    the same bijection sum through the compiled kernels in :mod:`._kernels`;
``pair_recursive``
    bracket/cobracket duality: split ``[H, K]`` over the single-edge cuts of a tree.
"""

from __future__ import annotations

import itertools
import math
from functools import reduce

from . import _kernels
from .errors import LieBasisError, NotATree
from .graphs import LabeledDigraph, connected
from .lie import LieCombo, LieExpr, Letter, parse_expr, spans
from .partition import Leaf, Node, PartitionTree, full_partition
from .words import WordLike

EVALUATORS = ("recursive", "bruteforce", "checked")


class EvaluatorMismatch(LieBasisError, AssertionError):
    """The cut recursion and the bijection sum disagreed."""


def _expr(e: LieExpr | str) -> LieExpr:
    return e if isinstance(e, LieExpr) else parse_expr(e)


def bijections(g: LabeledDigraph, e: LieExpr | str) -> list[dict[int, int]]:
    """Label-respecting bijections as ``{vertex id: position}``, positions 1-based."""
    e = _expr(e)
    letters = e.letters
    if len(g) != len(letters) or g.content != e.content:
        return []
    by_label_pos: dict[str, list[int]] = {}
    for p, c in enumerate(letters, start=1):
        by_label_pos.setdefault(c, []).append(p)
    by_label_vtx: dict[str, list[int]] = {}
    for i, c in g.vertices:
        by_label_vtx.setdefault(c, []).append(i)
    labels = sorted(by_label_pos)
    out = []
    for choice in itertools.product(*(itertools.permutations(by_label_pos[c]) for c in labels)):
        sigma = {}
        for c, positions in zip(labels, choice):
            sigma.update(zip(by_label_vtx[c], positions))
        out.append(sigma)
    return out


def pair_sigma(g: LabeledDigraph, e: LieExpr | str, sigma: dict[int, int]) -> int:
    """The single-bijection term: 0, or (-1)^(number of edges pointing leftwards)."""
    e = _expr(e)
    letters = e.letters
    n = len(letters)
    if set(sigma) != set(g.labels) or sorted(sigma.values()) != list(range(1, n + 1)):
        raise ValueError("sigma is not a bijection between vertices and positions")
    if any(g.labels[v] != letters[p - 1] for v, p in sigma.items()):
        raise ValueError("sigma does not respect labels")
    at = {p - 1: v for v, p in sigma.items()}
    for lo, mid, hi in spans(e):
        h = {at[p] for p in range(lo, mid)}
        k = {at[p] for p in range(mid, hi)}
        if not (connected(g, h) and connected(g, k)):
            return 0
        between = sum(1 for u, v in g.edges if (u in h and v in k) or (u in k and v in h))
        if between != 1:
            return 0
    leftward = sum(1 for u, v in g.edges if sigma[u] > sigma[v])
    return -1 if leftward % 2 else 1


def pair_definition(g: LabeledDigraph, e: LieExpr | str) -> int:
    """Sum of :func:`pair_sigma` over :func:`bijections`; pure Python reference."""
    e = _expr(e)
    return sum(pair_sigma(g, e, s) for s in bijections(g, e))


def pair_bruteforce(g: LabeledDigraph, e: LieExpr | str, backend: str | None = None) -> int:
    """Bijection sum via the compiled kernel (``backend``: numba, numpy or python)."""
    e = _expr(e)
    index = {i: k for k, (i, _) in enumerate(g.vertices)}
    vertex_labels = [c for _, c in g.vertices]
    edges = [(index[u], index[v]) for u, v in g.edges]
    return _kernels.pair_bijection_sum(vertex_labels, edges, e.letters, spans(e), backend)


def pair_recursive(g: LabeledDigraph, e: LieExpr | str) -> int:
    """Pairing by recursively cutting one edge per outer bracket. ``g`` must be a tree."""
    e = _expr(e)
    if not g.is_tree():
        raise NotATree("the cut recursion needs a tree")
    if len(g) != e.degree or g.content != e.content:
        return 0
    labels = g.labels
    nbr = g.neighbors
    edges = g.edges
    memo: dict[tuple[frozenset, LieExpr], int] = {}

    def side_of(u: int, v: int, vs: frozenset) -> frozenset:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in vs and y not in seen and not (x == u and y == v):
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def rec(vs: frozenset, x: LieExpr) -> int:
        if isinstance(x, Letter):
            return 1 if labels[next(iter(vs))] == x.letter else 0
        key = (vs, x)
        if key in memo:
            return memo[key]
        h, k = x.left, x.right
        total = 0
        for u, v in edges:
            if u not in vs or v not in vs:
                continue
            g1 = side_of(u, v, vs)
            size = len(g1)
            if size != h.degree and size != k.degree:
                continue
            c1 = tuple(sorted(labels[i] for i in g1))
            if size == h.degree and c1 == h.content:
                a = rec(g1, h)
                if a:
                    total += a * rec(vs - g1, k)
            if size == k.degree and c1 == k.content:
                a = rec(g1, k)
                if a:
                    total -= a * rec(vs - g1, h)
        memo[key] = total
        return total

    return rec(frozenset(labels), e)


def pair(g: LabeledDigraph, e: LieExpr | str, evaluator: str = "recursive") -> int:
    e = _expr(e)
    if evaluator == "recursive":
        return pair_recursive(g, e)
    if evaluator == "bruteforce":
        return pair_bruteforce(g, e)
    if evaluator == "checked":
        brute = pair_bruteforce(g, e)
        if g.is_tree():
            rec = pair_recursive(g, e)
            if rec != brute:
                raise EvaluatorMismatch(f"recursive {rec} != brute force {brute} for {e}")
        return brute
    raise ValueError(f"unknown evaluator {evaluator!r}; choose from {EVALUATORS}")


def pair_combo(g: LabeledDigraph, c: LieCombo, evaluator: str = "recursive") -> int:
    return sum(k * pair(g, e, evaluator) for e, k in c)


def self_pairing(w: PartitionTree | WordLike) -> int:
    """Closed form of the self-pairing of a Lyndon word: a product of factorials.

    ``Leaf -> 1``, ``Node(base, n, anchor) -> n! * self(base)**n * self(anchor)``.
    """
    t = w if isinstance(w, (Leaf, Node)) else full_partition(w)
    return _self(t)


def _self(t: PartitionTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return math.factorial(t.exponent) * _self(t.base) ** t.exponent * _self(t.anchor)


def factorial_factors(w: PartitionTree | WordLike) -> list[int]:
    """Exponents ``n`` (with repetition) whose factorials multiply to the self-pairing."""
    from .partition import exponents

    t = w if isinstance(w, (Leaf, Node)) else full_partition(w)
    return sorted((n for n in exponents(t) if n > 1), reverse=True)


def factorial_product(ns: list[int]) -> int:
    return reduce(lambda acc, n: acc * math.factorial(n), ns, 1)


__all__ = [
    "EVALUATORS",
    "EvaluatorMismatch",
    "bijections",
    "pair_sigma",
    "pair_definition",
    "pair_bruteforce",
    "pair_recursive",
    "pair",
    "pair_combo",
    "self_pairing",
    "factorial_factors",
    "factorial_product",
]
