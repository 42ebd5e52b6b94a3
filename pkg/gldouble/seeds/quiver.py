"""Quivers with stable, isolated and special vertices, and the quiver Q_n."""
from __future__ import annotations

import logging
from collections import Counter
from typing import Any, Callable, Iterable, Literal, Sequence

import networkx as nx
from pydantic import BaseModel, ConfigDict

from gldouble.errors import StructuralError
from gldouble.family.functions import enumerate_family

logger = logging.getLogger(__name__)

VertexKind = Literal["mutable", "stable", "isolated"]


class Vertex(BaseModel):
    """A quiver vertex: the label of its function, its kind and its order d."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    kind: VertexKind
    order: int = 1
    function: Any = None

    @property
    def special(self) -> bool:
        return self.order > 1

    @property
    def mutable(self) -> bool:
        return self.kind == "mutable"


class Quiver:
    """Vertices in a fixed order plus a multiset of arrows.

    Arrows live in a networkx MultiDiGraph; an arrow of multiplicity m is m
    parallel edges. Adding an arrow opposite to an existing one cancels it.
    """

    def __init__(self, vertices: Iterable[Vertex] = ()):
        self.graph = nx.MultiDiGraph()
        self._order: list[str] = []
        for v in vertices:
            self.add_vertex(v)

    # -- vertices -------------------------------------------------------------

    def add_vertex(self, vertex: Vertex) -> None:
        if vertex.label in self.graph:
            raise StructuralError(f"duplicate vertex {vertex.label}")
        self.graph.add_node(vertex.label, vertex=vertex)
        self._order.append(vertex.label)

    def vertex(self, label: str) -> Vertex:
        try:
            return self.graph.nodes[label]["vertex"]
        except KeyError:
            raise StructuralError(f"unknown vertex {label}") from None

    def __contains__(self, label: str) -> bool:
        return label in self.graph

    @property
    def vertices(self) -> list[Vertex]:
        return [self.graph.nodes[label]["vertex"] for label in self._order]

    @property
    def labels(self) -> list[str]:
        return list(self._order)

    def labels_of_kind(self, kind: VertexKind) -> list[str]:
        return [v.label for v in self.vertices if v.kind == kind]

    @property
    def mutable(self) -> list[str]:
        return self.labels_of_kind("mutable")

    @property
    def stable(self) -> list[str]:
        return self.labels_of_kind("stable")

    @property
    def isolated(self) -> list[str]:
        return self.labels_of_kind("isolated")

    @property
    def special(self) -> list[str]:
        return [v.label for v in self.vertices if v.special]

    def orders(self) -> dict[str, int]:
        return {v.label: v.order for v in self.vertices}

    # -- arrows ---------------------------------------------------------------

    def add_arrow(self, source: str, target: str, multiplicity: int = 1) -> None:
        for label in (source, target):
            if label not in self.graph:
                raise StructuralError(f"arrow endpoint {label} is not a vertex")
        if source == target:
            raise StructuralError(f"loop at {source}")
        for _ in range(multiplicity):
            if self.graph.has_edge(target, source):
                self.graph.remove_edge(target, source)
            else:
                self.graph.add_edge(source, target)

    def add_path(self, labels: Sequence[str]) -> None:
        for a, b in zip(labels, labels[1:]):
            self.add_arrow(a, b)

    def multiplicity(self, source: str, target: str) -> int:
        return self.graph.number_of_edges(source, target)

    def arrows(self) -> list[tuple[str, str, int]]:
        """(source, target, multiplicity) sorted by vertex order."""
        position = {label: i for i, label in enumerate(self._order)}
        pairs = {(u, v) for u, v in self.graph.edges()}
        return [
            (u, v, self.multiplicity(u, v))
            for u, v in sorted(pairs, key=lambda e: (position[e[0]], position[e[1]]))
        ]

    def arrow_multiset(self) -> Counter:
        return Counter({(u, v): m for u, v, m in self.arrows()})

    @property
    def arrow_count(self) -> int:
        return self.graph.number_of_edges()

    # -- derived quivers ------------------------------------------------------

    def induced(self, labels: Iterable[str], relabel: Callable[[Vertex], Vertex] | None = None) -> Quiver:
        """Subquiver on the given labels, vertices optionally replaced."""
        keep = set(labels)
        relabel = relabel or (lambda v: v)
        mapping = {}
        out = Quiver()
        for v in self.vertices:
            if v.label in keep:
                new = relabel(v)
                mapping[v.label] = new.label
                out.add_vertex(new)
        for u, v, m in self.arrows():
            if u in keep and v in keep:
                out.add_arrow(mapping[u], mapping[v], m)
        return out

    def validate(self) -> None:
        """Raise StructuralError on arrows at isolated vertices or opposite arrow pairs."""
        for label in self.isolated:
            if self.graph.degree(label):
                raise StructuralError(f"isolated vertex {label} has arrows")
        for u, v in self.graph.edges():
            if self.graph.has_edge(v, u):
                raise StructuralError(f"2-cycle between {u} and {v}")

    def copy(self) -> Quiver:
        out = Quiver(self.vertices)
        for u, v, m in self.arrows():
            out.add_arrow(u, v, m)
        return out

    def __repr__(self) -> str:
        return f"Quiver(vertices={len(self._order)}, arrows={self.arrow_count})"


# -- Q_n ------------------------------------------------------------------------


def resolve_label(n: int, kind: str, a: int, b: int) -> str:
    """Label of the vertex named (kind, a, b), with g_{i,i+1} = f_{n-i,1} and f_{k,n-k} = phi_{k,n-k}."""
    if kind == "g" and b == a + 1:
        return resolve_label(n, "f", n - a, 1)
    if kind == "f" and a + b == n:
        return resolve_label(n, "phi", a, b)
    return f"{kind}_{a}_{b}"


def _vertex_kind(fn) -> VertexKind:
    if fn.kind == "c":
        return "isolated"
    if (fn.kind == "g" and fn.indices[1] == 1) or (fn.kind == "h" and fn.indices[0] == 1):
        return "stable"
    return "mutable"


def g_triangles(n: int) -> list[tuple[tuple, tuple, tuple]]:
    return [
        (("g", i, j), ("g", i + 1, j + 1), ("g", i, j + 1))
        for i in range(1, n)
        for j in range(1, i + 1)
    ]


def h_triangles(n: int) -> list[tuple[tuple, tuple, tuple]]:
    return [
        (("h", i, j), ("h", i + 1, j + 1), ("h", i + 1, j))
        for i in range(1, n)
        for j in range(i + 1, n)
    ]


def f_triangles(n: int) -> list[tuple[tuple, tuple, tuple]]:
    return [
        (("f", k, l), ("f", k - 1, l), ("f", k - 1, l + 1))
        for k in range(2, n)
        for l in range(1, n - k)
    ]


def phi_triangles(n: int) -> list[tuple[tuple, tuple, tuple]]:
    return [
        (("phi", k, l), ("phi", k - 1, l + 1), ("phi", k, l + 1))
        for k in range(2, n)
        for l in range(1, n - k)
    ]


def qn_paths(n: int) -> list[list[tuple]]:
    """The six explicit paths of Q_n, before alias resolution."""
    paths = []
    if n > 2:
        zigzag = [("g", 1, 1), ("phi", 1, 1)]
        for m in range(2, n):
            zigzag += [("phi", m, 1), ("phi", 1, m)]
        paths.append(zigzag)
        paths.append([("phi", 1, l) for l in range(n - 1, 0, -1)] + [("h", 1, 1)])
    interleaved = []
    for m in range(1, n):
        interleaved.append(("phi", n - m, m))
        if m <= n - 2:
            interleaved.append(("f", n - m - 1, m))
    paths.append(interleaved)
    diagonal = [("h", 1, 1)]
    for m in range(1, n):
        diagonal += [("f", 1, n - m), ("h", m + 1, m + 1)]
    paths.append(diagonal)
    paths.append([("h", i, n) for i in range(n, 0, -1)])
    paths.append([("h", n, n)] + [("g", n, j) for j in range(n, 0, -1)])
    return paths


def build_Qn(n: int) -> Quiver:
    """The quiver Q_n on the vertices F_n."""
    if n < 2:
        raise ValueError(f"Q_n needs n >= 2, got {n}")

    def vertex_for(fn) -> Vertex:
        order = n if fn.label == "phi_1_1" else 1
        return Vertex(label=fn.label, kind=_vertex_kind(fn), order=order, function=fn)

    quiver = Quiver(vertex_for(fn) for fn in enumerate_family(n))

    def name(node: tuple) -> str:
        return resolve_label(n, *node)

    for family in (g_triangles, h_triangles, f_triangles, phi_triangles):
        for a, b, c in family(n):
            quiver.add_path([name(a), name(b), name(c), name(a)])
    for path in qn_paths(n):
        quiver.add_path([name(node) for node in path])

    quiver.validate()
    logger.debug("Built Q_n", extra={"n": n, "vertices": len(quiver.labels), "arrows": quiver.arrow_count})
    return quiver
