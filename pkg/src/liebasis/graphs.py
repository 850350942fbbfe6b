"""Letter-labeled directed graphs and star graphs of fully partitioned words."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from .errors import NotATree, ParseError
from .partition import Leaf, Node, PartitionTree, full_partition
from .words import WordLike

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledDigraph:
    """Vertices are ``(id, label)`` pairs; edges are ``(from, to)`` id pairs."""

    vertices: tuple[tuple[int, str], ...]
    edges: tuple[Edge, ...]
    anchor: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple((int(i), str(c)) for i, c in self.vertices))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        ids = [i for i, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("vertex ids must be unique")
        known = set(ids)
        for u, v in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {u}->{v} has an unknown endpoint")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
        if self.anchor is not None and self.anchor not in known:
            raise ValueError(f"anchor {self.anchor} is not a vertex")

    @cached_property
    def labels(self) -> dict[int, str]:
        return dict(self.vertices)

    @property
    def ids(self) -> list[int]:
        return [i for i, _ in self.vertices]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def neighbors(self) -> dict[int, list[int]]:
        nbr: dict[int, list[int]] = {i: [] for i, _ in self.vertices}
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return nbr

    @cached_property
    def content(self) -> tuple[str, ...]:
        return tuple(sorted(c for _, c in self.vertices))

    def label_counts(self) -> Counter:
        return Counter(c for _, c in self.vertices)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1 and connected(self, self.ids)

    def induced(self, subset: Iterable[int]) -> "LabeledDigraph":
        """Full subgraph on ``subset``; keeps the anchor when it lies inside."""
        keep = set(subset)
        _check_ids(self, keep)
        return LabeledDigraph(
            tuple((i, c) for i, c in self.vertices if i in keep),
            tuple((u, v) for u, v in self.edges if u in keep and v in keep),
            self.anchor if self.anchor in keep else None,
        )

    def to_json(self) -> dict:
        return {
            "format": 1,
            "vertices": [{"id": i, "label": c} for i, c in self.vertices],
            "edges": [{"from": u, "to": v} for u, v in self.edges],
            "anchor": self.anchor,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "LabeledDigraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            if data.get("format", 1) != 1:
                raise ParseError(f"unsupported graph format {data.get('format')!r}")
            return cls(
                tuple((v["id"], v["label"]) for v in data["vertices"]),
                tuple((e["from"], e["to"]) for e in data.get("edges", [])),
                data.get("anchor"),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"bad graph JSON: {exc}") from exc


class CutResult(NamedTuple):
    """Components after deleting one edge; the deleted edge pointed ``g1 -> g2``."""

    g1: LabeledDigraph
    g2: LabeledDigraph


def _check_ids(g: LabeledDigraph, subset: Iterable[int]) -> None:
    unknown = set(subset) - set(g.labels)
    if unknown:
        raise ValueError(f"unknown vertex ids {sorted(unknown)}")


def _component(g: LabeledDigraph, start: int, allowed: set[int], skip: Edge | None = None) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.neighbors[u]:
            if v in allowed and v not in seen:
                if skip is not None and {u, v} == set(skip):
                    continue
                seen.add(v)
                stack.append(v)
    return seen


def connected(g: LabeledDigraph, subset: Iterable[int]) -> bool:
    """Whether the induced subgraph on ``subset`` is connected, ignoring directions."""
    sub = set(subset)
    _check_ids(g, sub)
    if len(sub) <= 1:
        return True
    return _component(g, next(iter(sub)), sub) == sub


def edge_cuts(g: LabeledDigraph) -> list[tuple[Edge, CutResult]]:
    """Every single-edge cut of a tree, oriented along the removed edge."""
    if not g.is_tree():
        raise NotATree("edge cuts are only defined here for trees")
    everything = set(g.ids)
    out = []
    for e in g.edges:
        side = _component(g, e[0], everything, skip=e)
        out.append((e, CutResult(g.induced(side), g.induced(everything - side))))
    return out


def star_graph(t: PartitionTree | WordLike) -> LabeledDigraph:
    """Star graph of a partition tree (or of a word, partitioned first).

    Vertex ids are leaf positions, 0-based, left to right, so vertex ``i`` carries
    the ``i``-th letter of the word.
    """
    if not isinstance(t, (Leaf, Node)):
        t = full_partition(t)
    labels: list[str] = []
    edges: list[Edge] = []

    def build(node: PartitionTree) -> int:
        if isinstance(node, Leaf):
            labels.append(node.letter)
            return len(labels) - 1
        anchors = [build(node.base) for _ in range(node.exponent)]
        target = build(node.anchor)
        edges.extend((a, target) for a in anchors)
        return target

    anchor = build(t)
    return LabeledDigraph(tuple(enumerate(labels)), tuple(sorted(edges)), anchor)


def path_graph(word: WordLike) -> LabeledDigraph:
    """The long graph ``w1 -> w2 -> ... -> wn``."""
    s = str(word)
    return LabeledDigraph(tuple(enumerate(s)), tuple((i, i + 1) for i in range(len(s) - 1)), None)


def to_dot(g: LabeledDigraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for i, c in g.vertices:
        shape = "doublecircle" if i == g.anchor else "circle"
        lines.append(f'  v{i} [label="{c}", shape={shape}];')
    for u, v in g.edges:
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
