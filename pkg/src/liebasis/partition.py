"""Simple and full partitions of words.

A word ``a^n x`` (``x != a``, ``n >= 0``) is *a-simple*. Every word has at most
one decomposition into a-simple blocks, ``a`` being its first letter. Treating
the blocks as letters of a new alphabet and repeating gives the full
partition, represented here as a :class:`PartitionTree`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence, TypeVar, Union

from .errors import NotFullyPartitionable, NotPartitionable, ParseError
from .words import WordLike

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class Leaf:
    letter: str

    @property
    def level(self) -> int:
        return 0

    @property
    def size(self) -> int:
        return 1

    def flatten(self) -> str:
        return self.letter


@dataclass(frozen=True)
class Node:
    """The simple word ``base^exponent anchor`` over blocks of the level below."""

    base: "PartitionTree"
    exponent: int
    anchor: "PartitionTree"

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError("Node exponent must be >= 1; use the anchor alone for n = 0")
        if self.base == self.anchor:
            raise ValueError("base and anchor of a simple word must differ")

    @cached_property
    def level(self) -> int:
        # the repeated block always starts with the previous level's first block,
        # so it was built exactly one level down
        return 1 + self.base.level

    @cached_property
    def size(self) -> int:
        return self.exponent * self.base.size + self.anchor.size

    def flatten(self) -> str:
        return self.base.flatten() * self.exponent + self.anchor.flatten()


PartitionTree = Union[Leaf, Node]


def _blocks(items: Sequence[T]) -> list[list[T]]:
    """Greedy a-simple blocks of ``items``; raises when a trailing run of the first item remains."""
    first = items[0]
    blocks: list[list[T]] = []
    run: list[T] = []
    for x in items:
        run.append(x)
        if x != first:
            blocks.append(run)
            run = []
    if run:
        raise NotPartitionable("trailing run of the first letter")
    return blocks


def simple_partition(w: WordLike) -> list[str]:
    """Split ``w`` into a-simple words, ``a`` its first letter.

    >>> simple_partition("aabcb")
    ['aab', 'c', 'b']
    """
    s = str(w)
    if not s:
        raise ValueError("words must be nonempty")
    if len(s) == 1:
        return [s]
    try:
        return ["".join(b) for b in _blocks(s)]
    except NotPartitionable:
        raise NotPartitionable(_reason(list(s), 1), list(s)) from None


def _reason(items: list, stage: int) -> str:
    first = render(items[0], stage - 1) if stage > 1 else items[0]
    if all(x == items[0] for x in items):
        if stage == 1:
            return f"contains repetitions of only one letter {first}"
        return f"is repetitions of a single subword {first}"
    what = "letter" if stage == 1 else "subword"
    return f"has the same initial and final {what} {first}"


def full_partition(w: WordLike) -> PartitionTree:
    """Nested partition of ``w`` into simple words of simple words of ...

    Raises :class:`NotFullyPartitionable` carrying the failing stage (1 for the
    letters themselves) and the block sequence there.
    """
    s = str(w)
    if not s:
        raise ValueError("words must be nonempty")
    items: list[PartitionTree] = [Leaf(c) for c in s]
    stage = 1
    while len(items) > 1:
        try:
            blocks = _blocks(items)
        except NotPartitionable:
            rendered = [render(t, stage - 1) for t in items]
            raise NotFullyPartitionable(_reason(
                items if stage > 1 else [t.letter for t in items], stage), stage, rendered
            ) from None
        items = [b[0] if len(b) == 1 else Node(b[0], len(b) - 1, b[-1]) for b in blocks]
        stage += 1
    return items[0]


def fully_partitions(w: WordLike) -> bool:
    try:
        full_partition(w)
    except NotPartitionable:
        return False
    return True


def render(t: PartitionTree, depth: int) -> str:
    """Nested-parenthesis text of ``t`` viewed as a block at partition level ``depth``."""
    if depth == 0:
        return t.flatten()
    if t.level < depth:
        return "(" + render(t, depth - 1) + ")"
    assert isinstance(t, Node)
    inner = render(t.base, depth - 1) * t.exponent + render(t.anchor, depth - 1)
    return "(" + inner + ")"


def format_tree(t: PartitionTree) -> str:
    """``(((aab)(c))((b)))`` style text; a lone letter prints as ``(x)``."""
    return render(t, max(1, t.level))


def levels(t: PartitionTree) -> list[list[str]]:
    """The partition chain, one list of block words per level, finest first."""
    depth = max(1, t.level)
    out = []
    blocks = [t]
    chain = [blocks]
    for d in range(depth, 1, -1):
        nxt: list[PartitionTree] = []
        for b in blocks:
            if b.level < d:
                nxt.append(b)
            else:
                nxt.extend([b.base] * b.exponent + [b.anchor])
        blocks = nxt
        chain.append(blocks)
    for blocks in reversed(chain):
        out.append([b.flatten() for b in blocks])
    return out


def tree_to_json(t: PartitionTree) -> Union[str, dict]:
    if isinstance(t, Leaf):
        return t.letter
    return {"base": tree_to_json(t.base), "exponent": t.exponent, "anchor": tree_to_json(t.anchor)}


def tree_from_json(data: Union[str, dict]) -> PartitionTree:
    try:
        if isinstance(data, str):
            if len(data) != 1:
                raise ParseError(f"leaf must be a single letter, got {data!r}")
            return Leaf(data)
        return Node(tree_from_json(data["base"]), int(data["exponent"]), tree_from_json(data["anchor"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad partition tree: {exc}") from exc


def exponents(t: PartitionTree) -> list[int]:
    """Exponents of every node, pre-order. Their factorials multiply to the self-pairing."""
    if isinstance(t, Leaf):
        return []
    return [t.exponent] + exponents(t.base) * t.exponent + exponents(t.anchor)
