"""Sample points of D(GL_n), of its diagonal and of the dual group G_r."""
import hashlib
import logging
import random
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from gldouble.config import settings
from gldouble.errors import DimensionError
from gldouble.exact import Mat

logger = logging.getLogger(__name__)


def _digest(*mats: Mat) -> str:
    h = hashlib.sha256()
    for m in mats:
        h.update(repr(m.to_strings()).encode())
        h.update(b"|")
    return h.hexdigest()


class DoublePoint(BaseModel):
    """A point (X, Y) of the double with both factors invertible."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    X: Mat
    Y: Mat

    @model_validator(mode="after")
    def validate_point(self):
        if self.X.shape != self.Y.shape:
            raise DimensionError(f"X and Y differ in shape: {self.X.shape} vs {self.Y.shape}")
        if self.X.det() == 0 or self.Y.det() == 0:
            raise ValueError("both X and Y must be invertible")
        return self

    @property
    def n(self) -> int:
        return self.X.n

    @property
    def digest(self) -> str:
        return _digest(self.X, self.Y)

    @property
    def is_diagonal(self) -> bool:
        return self.X == self.Y

    def to_strings(self) -> dict[str, list[list[str]]]:
        return {"X": self.X.to_strings(), "Y": self.Y.to_strings()}


class DualPoint(BaseModel):
    """A point (B+, B-) of G_r: triangular factors with reciprocal diagonals."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    bplus: Mat
    bminus: Mat

    @model_validator(mode="after")
    def validate_point(self):
        if self.bplus.shape != self.bminus.shape:
            raise DimensionError("bplus and bminus differ in shape")
        if not self.bplus.is_upper_triangular() or not self.bminus.is_lower_triangular():
            raise ValueError("bplus must be upper and bminus lower triangular")
        n = self.bplus.n
        for i in range(n):
            if self.bplus[i, i] * self.bminus[i, i] != 1:
                raise ValueError(f"diagonal entries {i + 1} are not reciprocal")
        return self

    @property
    def n(self) -> int:
        return self.bplus.n

    @property
    def u(self) -> Mat:
        """U = B+^-1 B-."""
        return self.bplus.inverse() @ self.bminus

    @property
    def digest(self) -> str:
        return _digest(self.bplus, self.bminus)

    def as_double(self) -> DoublePoint:
        return DoublePoint(X=self.bplus, Y=self.bminus)

    def to_strings(self) -> dict[str, list[list[str]]]:
        return {"bplus": self.bplus.to_strings(), "bminus": self.bminus.to_strings()}


def random_integer_matrix(n: int, rng: random.Random, bound: int) -> Mat:
    return Mat([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_invertible(n: int, rng: random.Random, bound: int) -> Mat:
    """Integer matrix with entries in [-bound, bound], redrawn until invertible."""
    if bound < 1:
        raise ValueError(f"sampling bound must be >= 1, got {bound}")
    while True:
        M = random_integer_matrix(n, rng, bound)
        if M.det() != 0:
            return M


def _nonzero(rng: random.Random, bound: int) -> int:
    value = 0
    while value == 0:
        value = rng.randint(-bound, bound)
    return value


def sample_double_point(n: int, rng: random.Random, bound: int | None = None) -> DoublePoint:
    """Random integer point of D(GL_n), deterministic given the rng state."""
    bound = bound or settings.sample_bound
    X = random_invertible(n, rng, bound)
    Y = random_invertible(n, rng, bound)
    return DoublePoint(X=X, Y=Y)


def sample_diagonal_point(n: int, rng: random.Random, bound: int | None = None) -> DoublePoint:
    """Random point (X, X) of the diagonal subgroup."""
    bound = bound or settings.sample_bound
    X = random_invertible(n, rng, bound)
    return DoublePoint(X=X, Y=X)


def sample_dual_point(n: int, rng: random.Random, bound: int | None = None) -> DualPoint:
    """Random point of G_r with integer off-diagonal entries."""
    bound = bound or settings.sample_bound
    if bound < 1:
        raise ValueError(f"sampling bound must be >= 1, got {bound}")
    diag = [_nonzero(rng, bound) for _ in range(n)]
    upper = [
        [Fraction(diag[i]) if i == j else Fraction(rng.randint(-bound, bound)) if j > i else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    lower = [
        [Fraction(1, diag[i]) if i == j else Fraction(rng.randint(-bound, bound)) if j < i else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    return DualPoint(bplus=Mat(upper), bminus=Mat(lower))


def sample_points(n: int, count: int, rng: random.Random, kind: str = "double", bound: int | None = None) -> list:
    """`count` points of the requested kind: double, diagonal or dual."""
    samplers = {
        "double": sample_double_point,
        "diagonal": sample_diagonal_point,
        "dual": sample_dual_point,
    }
    if kind not in samplers:
        raise ValueError(f"Unknown point kind: {kind}. Available: {', '.join(samplers)}")
    points = [samplers[kind](n, rng, bound) for _ in range(count)]
    logger.debug("Sampled points", extra={"n": n, "count": count, "kind": kind})
    return points
