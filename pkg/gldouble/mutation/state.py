"""Mutation states, generalized exchange relations and adjacent seeds."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from gldouble.config import settings
from gldouble.errors import MutationError, ResampleRequired
from gldouble.exact import MatrixLike
from gldouble.mutation.matrix import mutate_coefficients, mutate_matrix
from gldouble.seeds.exchange_matrix import quiver_from_btilde
from gldouble.seeds.seed import Seed
from gldouble.seeds.strings import CoefficientString, LaurentMonomial, cluster_tau_monomials

logger = logging.getLogger(__name__)


def point_matrices(p) -> tuple[MatrixLike, MatrixLike]:
    if hasattr(p, "bplus"):
        return p.bplus, p.bminus
    return p.X, p.Y


def monomial_degree(monomial: LaurentMonomial, degrees: dict[str, int]) -> int:
    return sum(e * degrees[x] for x, e in monomial.exponents)


class ExchangeNumerator:
    """sum_j p-hat_j u_>^j u_<^(d-j) of one vertex, as an evaluator on (X, Y)."""

    def __init__(self, seed: Seed, k: str):
        if k not in seed.exchange.rows:
            raise MutationError(f"{k} is not a mutable vertex")
        self.k = k
        self.string: CoefficientString = seed.strings[k]
        self.p_hats = self.string.p_hats(seed.exchange)
        self.u_greater, self.u_less = cluster_tau_monomials(seed.exchange, k)
        self.variables: dict[str, Callable] = {label: seed.function(label) for label in seed.labels}
        self.label = f"N[{getattr(self.variables[k], 'label', k)}]"
        self.dual = seed.space == "dual"

    @property
    def order(self) -> int:
        return self.string.order

    @property
    def degree(self) -> int:
        degrees = {label: getattr(fn, "degree", 0) for label, fn in self.variables.items()}
        d = self.order
        return max(
            monomial_degree(self.p_hats[j], degrees)
            + j * monomial_degree(self.u_greater, degrees)
            + (d - j) * monomial_degree(self.u_less, degrees)
            for j in range(d + 1)
        )

    def terms(self, X: MatrixLike, Y: MatrixLike) -> list:
        """The d+1 summands at (X, Y)."""
        needed = {x for m in (*self.p_hats, self.u_greater, self.u_less) for x, _ in m.exponents}
        values = {x: self.variables[x](X, Y) for x in needed}
        d = self.order
        ug, ul = self.u_greater.evaluate(values), self.u_less.evaluate(values)
        return [self.p_hats[j].evaluate(values) * ug**j * ul ** (d - j) for j in range(d + 1)]

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        total: Any = Fraction(0)
        for term in self.terms(X, Y):
            total = total + term
        return total


class MutatedVariable:
    """x'_k = N_k / x_k for the seed it was mutated from."""

    def __init__(self, numerator: ExchangeNumerator, old: Callable, history: tuple[str, ...]):
        self.numerator = numerator
        self.old = old
        self.history = history
        self.label = f"{numerator.k}@{'.'.join(history)}"
        self.dual = numerator.dual
        self.depth = getattr(old, "depth", 0) + 1

    @property
    def degree(self) -> int:
        return self.numerator.degree - getattr(self.old, "degree", 0)

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        return self.numerator(X, Y) / self.old(X, Y)

    def __repr__(self) -> str:
        return f"MutatedVariable({self.label})"


@dataclass(frozen=True)
class MutationState:
    """A seed reached from an initial seed by a sequence of mutations."""

    seed: Seed
    history: tuple[str, ...] = ()
    flags: tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def initial(cls, seed: Seed) -> MutationState:
        return cls(seed=seed)

    @property
    def variables(self) -> dict[str, Callable]:
        return {label: self.seed.function(label) for label in self.seed.labels}

    def variable(self, label: str) -> Callable:
        return self.seed.function(label)

    def depth_at(self, label: str) -> int:
        return sum(1 for k in self.history if k == label)


def exchange_value(state: MutationState, k: str, p) -> Fraction:
    """x'_k(p) from the generalized exchange relation.

    Raises:
        ResampleRequired: x_k vanishes at p
    """
    X, Y = point_matrices(p)
    x_k = state.variable(k)(X, Y)
    if x_k == 0:
        raise ResampleRequired(f"{k} vanishes at the sample point")
    return ExchangeNumerator(state.seed, k)(X, Y) / x_k


def mutate_seed(state: MutationState, k: str, max_depth: int | None = None) -> MutationState:
    """The adjacent state in direction k: matrix, strings and cluster mutated together.

    Raises:
        MutationError: k is not mutable, or the history would exceed the depth limit
    """
    seed = state.seed
    max_depth = max_depth or settings.max_mutation_depth
    if k not in seed.exchange.rows:
        raise MutationError(f"cannot mutate at {k}: not a mutable vertex")
    if len(state.history) >= max_depth:
        raise MutationError(f"mutation depth limit {max_depth} reached")

    history = state.history + (k,)
    numerator = ExchangeNumerator(seed, k)
    new_var = MutatedVariable(numerator, seed.function(k), history)

    B = mutate_matrix(seed.exchange, k)
    strings = mutate_coefficients(seed.strings, k)

    template = seed.quiver.copy()
    vertex = template.vertex(k)
    template.graph.nodes[k]["vertex"] = vertex.model_copy(update={"function": new_var})
    quiver = quiver_from_btilde(B, template)

    flags = list(state.flags)
    for label in B.rows:
        if not B.order_divides_row(label):
            flags.append(f"d_{label} does not divide its row gcd after {'.'.join(history)}")
            logger.warning("Row order no longer divides row gcd", extra={"vertex": label, "history": history})

    new_seed = Seed(n=seed.n, space=seed.space, quiver=quiver, exchange=B, strings=strings, notes=seed.notes)
    logger.debug("Mutated seed", extra={"vertex": k, "depth": len(history)})
    return MutationState(seed=new_seed, history=history, flags=tuple(flags))


def mutate_sequence(state: MutationState, sequence: list[str], max_depth: int | None = None) -> MutationState:
    for k in sequence:
        state = mutate_seed(state, k, max_depth)
    return state
