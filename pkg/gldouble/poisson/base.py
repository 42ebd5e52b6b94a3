"""Abstract base class for Poisson brackets evaluated at sample points."""
import logging
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, List

from gldouble.poisson.cache import GradientCache

logger = logging.getLogger(__name__)


class BaseBracket(ABC):
    """Abstract base class for the brackets {,}_D, {,}_r and {,}_*."""

    # Kind of sample point the bracket lives on: "double", "diagonal" or "dual".
    point_kind: str = "double"

    def __init__(self, name: str, cache: GradientCache | None = None):
        """
        Initialize the bracket.

        Args:
            name: Bracket name (e.g., "double")
            cache: Gradient cache shared across pairs; a private one is created if omitted
        """
        self.name = name
        self.cache = cache if cache is not None else GradientCache()

    @abstractmethod
    def gradient(self, fn: Callable, point: Any) -> Any:
        """
        Compute the gradients of a function at a point.

        Args:
            fn: Evaluator in the form this bracket expects
            point: Sample point of the matching kind

        Returns:
            Gradient record carrying the function value as `.value`
        """
        pass

    @abstractmethod
    def from_gradients(self, grad_f: Any, grad_g: Any) -> Fraction:
        """
        Evaluate {f, g} from precomputed gradients.

        Args:
            grad_f: Gradients of f
            grad_g: Gradients of g

        Returns:
            Exact value of the bracket
        """
        pass

    @abstractmethod
    def sample_point(self, n: int, rng: random.Random, bound: int | None = None) -> Any:
        """Draw a random point of the manifold the bracket is defined on."""
        pass

    def point_digest(self, point: Any) -> str:
        return point.digest

    def cached_gradient(self, fn: Callable, point: Any) -> Any:
        """Gradients of fn at point, computed at most once per (label, point)."""
        label = getattr(fn, "label", None)
        digest = self.point_digest(point)
        grads = self.cache.get(self.name, label, digest)
        if grads is None:
            grads = self.gradient(fn, point)
            self.cache.set(self.name, label, digest, grads)
        return grads

    def value(self, fn: Callable, point: Any) -> Fraction:
        return self.cached_gradient(fn, point).value

    def bracket(self, f: Callable, g: Callable, point: Any) -> Fraction:
        """{f, g} at point."""
        return self.from_gradients(self.cached_gradient(f, point), self.cached_gradient(g, point))

    def prepare(self, fns: List[Callable]) -> List[Callable]:
        """Adapt evaluators to the form `gradient` expects; identity by default."""
        return list(fns)
