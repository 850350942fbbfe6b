"""Projection onto the left-greedy Lyndon basis, and basis verification reports.

The coefficient of the basis element for a Lyndon word ``w`` in an expression
``L`` is the pairing of the star graph of ``w`` with ``L`` divided by the
self-pairing of ``w``. The division is checked to be exact.
"""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import NonIntegralCoefficient
from .graphs import star_graph
from .lie import (
    LieCombo,
    LieExpr,
    assoc_expand,
    format_terms,
    left_greedy_bracket,
    parse_expr,
    poly_add,
)
from .pairing import factorial_factors, pair, self_pairing
from .words import Alphabet, Content, _alphabet, enumerate_lyndon_by_content, enumerate_lyndon_by_length


@dataclass(frozen=True)
class BasisExpansion:
    """``sum(c * lg(w))`` over distinct Lyndon words ``w``; zero terms omitted."""

    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        words = [w for w, _ in self.terms]
        if len(set(words)) != len(words):
            raise ValueError("basis words must be distinct")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero coefficients are omitted")

    def as_dict(self) -> dict[str, int]:
        return dict(self.terms)

    def to_combo(self) -> LieCombo:
        return LieCombo([(left_greedy_bracket(w), c) for w, c in self.terms])

    def __str__(self) -> str:
        return format_terms((left_greedy_bracket(w), c) for w, c in self.terms)

    def words_text(self) -> str:
        """``+1*aababb -1*aabbab``: the expansion indexed by Lyndon words."""
        return format_terms(self.terms)

    def to_json(self) -> dict:
        return {
            "format": 1,
            "terms": [
                {"word": w, "coefficient": c, "bracket": str(left_greedy_bracket(w))}
                for w, c in self.terms
            ],
        }

    def __len__(self) -> int:
        return len(self.terms)


def _content(e: LieExpr) -> Content:
    return Content.of(e.letters)


def coefficients(
    L: LieExpr | str, evaluator: str = "recursive", alphabet: Alphabet | str | None = None
) -> list[tuple[str, int, int]]:
    """``(word, pairing with L, self-pairing)`` for every Lyndon word of ``L``'s content."""
    L = L if isinstance(L, LieExpr) else parse_expr(L)
    alpha = _alphabet(alphabet, L.letters)
    return [
        (w, pair(star_graph(w), L, evaluator), self_pairing(w))
        for w in enumerate_lyndon_by_content(_content(L), alpha)
    ]


def project(
    L: LieExpr | str, evaluator: str = "recursive", alphabet: Alphabet | str | None = None
) -> BasisExpansion:
    """Write ``L`` in the left-greedy basis with exact integer coefficients."""
    L = L if isinstance(L, LieExpr) else parse_expr(L)
    terms = []
    for w, num, den in coefficients(L, evaluator, alphabet):
        q, r = divmod(num, den)
        if r:
            raise NonIntegralCoefficient(f"<star({w}), {L}> = {num} is not divisible by {den}")
        if q:
            terms.append((w, q))
    return BasisExpansion(tuple(terms))


def project_combo(
    c: LieCombo, evaluator: str = "recursive", alphabet: Alphabet | str | None = None
) -> BasisExpansion:
    """Linear extension of :func:`project`; terms are grouped by content first."""
    letters = "".join(e.letters for e, _ in c)
    alpha = _alphabet(alphabet, letters or "a")
    acc: dict[str, int] = defaultdict(int)
    for e, k in c:
        for w, q in project(e, evaluator, alpha).terms:
            acc[w] += k * q
    ordered = sorted(((w, q) for w, q in acc.items() if q), key=lambda t: (len(t[0]), alpha.key(t[0])))
    return BasisExpansion(tuple(ordered))


def project_verify(L: LieExpr | str | LieCombo, expansion: BasisExpansion) -> bool:
    """Check the expansion against ``L`` in the free associative algebra."""
    if isinstance(L, LieCombo):
        lhs = L.assoc_expand()
    else:
        lhs = assoc_expand(L if isinstance(L, LieExpr) else parse_expr(L))
    rhs: dict[str, int] = {}
    for w, c in expansion.terms:
        rhs = poly_add(rhs, assoc_expand(left_greedy_bracket(w)), c)
    return lhs == rhs


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_dimension(k: int, n: int) -> int:
    """Number of Lyndon words of length ``n`` on ``k`` letters (necklace formula)."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    total = sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


# ---------------------------------------------------------------- verification report


DEFAULT_MAX_DEGREE = {1: 8, 2: 8, 3: 6}


@dataclass
class ContentReport:
    content: str
    words: list[str]
    matrix: list[list[int]]
    diagonal_ok: bool
    self_pairings: list[int]
    factorials: list[list[int]]
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.diagonal_ok and not self.mismatches


@dataclass
class BasisReport:
    alphabet: str
    max_degree: int
    evaluator: str
    contents: list[ContentReport]
    counts: list[dict]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.contents) and all(row["ok"] for row in self.counts)

    def to_json(self) -> dict:
        return {
            "format": 1,
            "alphabet": self.alphabet,
            "max_degree": self.max_degree,
            "evaluator": self.evaluator,
            "ok": self.ok,
            "counts": self.counts,
            "contents": [
                {
                    "content": c.content,
                    "words": c.words,
                    "matrix": c.matrix,
                    "diagonal": c.diagonal_ok,
                    "self_pairings": c.self_pairings,
                    "factorials": c.factorials,
                    "mismatches": c.mismatches,
                    "ok": c.ok,
                }
                for c in self.contents
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def table(self) -> str:
        lines = [f"alphabet {self.alphabet}  max degree {self.max_degree}  evaluator {self.evaluator}"]
        lines.append("degree  lyndon  witt  ok")
        for row in self.counts:
            lines.append(f"{row['degree']:>6}  {row['lyndon']:>6}  {row['witt']:>4}  {'yes' if row['ok'] else 'NO'}")
        lines.append("content        words  diagonal  self-pairings")
        for c in self.contents:
            diag = " ".join(
                f"{v}={'*'.join(f'{n}!' for n in fs) or '1'}" for v, fs in zip(c.self_pairings, c.factorials)
            )
            lines.append(f"{c.content:<14} {len(c.words):>5}  {'yes' if c.ok else 'NO':>8}  {diag}")
            lines.extend(f"    {m}" for m in c.mismatches)
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def contents_of_degree(alphabet: Alphabet | str, n: int) -> list[Content]:
    alpha = _alphabet(alphabet)
    out = []
    for combo in combinations_with_replacement(alpha.letters, n):
        out.append(Content.of(combo))
    return out


def pairing_matrix(words: list[str], evaluator: str = "recursive", workers: int = 1) -> list[list[int]]:
    """``M[i][j] = <star(w_i), lg(w_j)>``."""
    brackets = [left_greedy_bracket(w) for w in words]
    graphs = [star_graph(w) for w in words]
    cells = [(i, j) for i in range(len(words)) for j in range(len(words))]

    def cell(ij: tuple[int, int]) -> int:
        return pair(graphs[ij[0]], brackets[ij[1]], evaluator)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            values = list(pool.map(cell, cells))
    else:
        values = [cell(ij) for ij in cells]
    it = iter(values)
    return [[next(it) for _ in words] for _ in words]


def verify_content(content: Content, alphabet: Alphabet, evaluator: str = "recursive") -> ContentReport:
    words = enumerate_lyndon_by_content(content, alphabet)
    matrix = pairing_matrix(words, evaluator)
    selfs = [self_pairing(w) for w in words]
    diagonal = all(
        (matrix[i][j] == 0) if i != j else matrix[i][i] > 0
        for i in range(len(words))
        for j in range(len(words))
    )
    mismatches = [
        f"{w}: pairing {matrix[i][i]} != closed form {selfs[i]}"
        for i, w in enumerate(words)
        if matrix[i][i] != selfs[i]
    ]
    return ContentReport(
        content=str(content),
        words=words,
        matrix=matrix,
        diagonal_ok=diagonal,
        self_pairings=selfs,
        factorials=[factorial_factors(w) for w in words],
        mismatches=mismatches,
    )


def verify_basis(
    alphabet: Alphabet | str, max_degree: int | None = None, evaluator: str = "recursive"
) -> BasisReport:
    """Diagonality of the star/left-greedy pairing and Lyndon counts, per content."""
    alpha = _alphabet(alphabet)
    if max_degree is None:
        max_degree = DEFAULT_MAX_DEGREE.get(len(alpha), 5)
    if max_degree < 1:
        raise ValueError("max degree must be >= 1")
    reports = []
    counts = []
    for n in range(1, max_degree + 1):
        found = 0
        for content in contents_of_degree(alpha, n):
            r = verify_content(content, alpha, evaluator)
            found += len(r.words)
            if r.words:
                reports.append(r)
        listed = len(enumerate_lyndon_by_length(alpha, n))
        witt = witt_dimension(len(alpha), n)
        counts.append({"degree": n, "lyndon": found, "witt": witt, "ok": found == witt == listed})
    return BasisReport(alpha.letters, max_degree, evaluator, reports, counts)


__all__ = [
    "BasisExpansion",
    "BasisReport",
    "ContentReport",
    "coefficients",
    "project",
    "project_combo",
    "project_verify",
    "witt_dimension",
    "mobius",
    "verify_basis",
    "verify_content",
    "pairing_matrix",
    "contents_of_degree",
]
