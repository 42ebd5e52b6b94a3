"""Extended seeds: the initial seed on D(GL_n), its diagonal reduction and the dual seed."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Literal

from gldouble.errors import StructuralError
from gldouble.family.functions import casimir, det_u, h, psi
from gldouble.poisson.brackets import DiagonalRestriction
from gldouble.seeds.exchange_matrix import ExtendedExchangeMatrix, to_Btilde
from gldouble.seeds.quiver import Quiver, Vertex, build_Qn
from gldouble.seeds.strings import CoefficientString, build_strings

logger = logging.getLogger(__name__)

Space = Literal["double", "diagonal", "dual"]


@dataclass(frozen=True)
class Seed:
    """Extended cluster, quiver, exchange matrix and coefficient strings."""

    n: int
    space: Space
    quiver: Quiver
    exchange: ExtendedExchangeMatrix
    strings: dict[str, CoefficientString]
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def labels(self) -> list[str]:
        return self.quiver.labels

    @property
    def mutable(self) -> list[str]:
        return self.quiver.mutable

    @property
    def stable(self) -> list[str]:
        return self.quiver.stable

    @property
    def isolated(self) -> list[str]:
        return self.quiver.isolated

    def function(self, label: str) -> Callable:
        return self.quiver.vertex(label).function

    @property
    def cluster(self) -> list[Callable]:
        """Extended cluster in vertex order, isolated Casimirs last."""
        return [v.function for v in self.quiver.vertices]

    def bracket_name(self) -> str:
        return {"double": "double", "diagonal": "std", "dual": "dual"}[self.space]


def build_initial_seed(n: int) -> Seed:
    """The extended seed (F_n, Q_n, P_n) on D(GL_n)."""
    quiver = build_Qn(n)
    B = to_Btilde(quiver)
    strings = build_strings(B)
    logger.info(
        "Built initial seed",
        extra={"n": n, "mutable": len(B.rows), "stable": len(B.stable), "isolated": len(quiver.isolated)},
    )
    return Seed(n=n, space="double", quiver=quiver, exchange=B, strings=strings)


def diagonal_reduce(seed: Seed) -> Seed:
    """Erase f and phi vertices, identify h_ii with g_ii, drop the Casimirs.

    The result is a seed of the standard cluster structure on GL_n; its cluster
    functions are minors of a single matrix.
    """
    if seed.space != "double":
        raise StructuralError("diagonal reduction applies to seeds on the double")
    n = seed.n

    def target(label: str) -> str | None:
        kind, *idx = label.split("_")
        if kind in ("f", "phi", "c"):
            return None
        if kind == "h" and idx[0] == idx[1]:
            return f"g_{idx[0]}_{idx[1]}"
        return label

    reduced = Quiver()
    for v in seed.quiver.vertices:
        new = target(v.label)
        if new is None or new != v.label:
            continue
        reduced.add_vertex(Vertex(label=v.label, kind=v.kind, order=1, function=DiagonalRestriction(v.function)))
    for u, w, m in seed.quiver.arrows():
        a, b = target(u), target(w)
        if a is None or b is None or a == b:
            continue
        reduced.add_arrow(a, b, m)
    reduced.validate()

    B = to_Btilde(reduced)
    strings = build_strings(B)
    logger.info("Reduced seed to the diagonal", extra={"n": n, "vertices": len(reduced.labels)})
    return Seed(n=n, space="diagonal", quiver=reduced, exchange=B, strings=strings)


def dual_label_map(n: int) -> dict[str, Callable]:
    """Vertex of Q_n -> function on GL_n* for the phi, f and h_ii vertices."""
    out: dict[str, Callable] = {}
    for k in range(1, n):
        for l in range(1, n - k + 1):
            out[f"phi_{k}_{l}"] = psi(n, k, l)
    for k in range(1, n - 1):
        for l in range(1, n - k):
            out[f"f_{k}_{l}"] = h(n, n - k - l + 1, n - l + 1, on_u=True)
    out["h_1_1"] = det_u(n)
    for i in range(2, n + 1):
        out[f"h_{i}_{i}"] = h(n, i, i, on_u=True)
    return out


def build_dual_seed(n: int) -> Seed:
    """The seed (F*_n, Q*_n, P_n) on GL_n*, built from the subquiver of Q_n on phi, f and h_ii."""
    if n < 2:
        raise ValueError(f"the dual seed needs n >= 2, got {n}")
    qn = build_Qn(n)
    functions = dual_label_map(n)

    def relabel(v: Vertex) -> Vertex:
        fn = functions[v.label]
        kind = "stable" if v.label.startswith("h_") else "mutable"
        return Vertex(label=fn.label, kind=kind, order=v.order, function=fn)

    quiver = qn.induced(functions.keys(), relabel)
    for r in range(1, n):
        c = casimir(n, r, on_u=True)
        quiver.add_vertex(Vertex(label=c.label, kind="isolated", function=c))
    quiver.validate()

    B = to_Btilde(quiver)
    strings = build_strings(B, casimir_label=lambda r: f"cU_{r}")
    notes = {
        "index_map": {old: fn.label for old, fn in functions.items()},
        "extra_stable": "detU",
    }
    logger.info("Built dual seed", extra={"n": n, "vertices": len(quiver.labels)})
    return Seed(n=n, space="dual", quiver=quiver, exchange=B, strings=strings, notes=notes)
