"""The function family F_n on D(GL_n) and its dual counterpart on GL_n*."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Literal, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from gldouble.exact import Jet, Mat, MatrixLike, poly_coeffs_from_pencil
from gldouble.family.signs import casimir_sign, sign_skl

Kind = Literal["g", "h", "f", "phi", "c", "psi", "detU"]

# Evaluators take (X, Y) as Mat or JetMat and return a Fraction or Jet.
Evaluator = Callable[[MatrixLike, MatrixLike], Any]


def _rng(a: int, b: int) -> list[int]:
    """0-based indices for the 1-based closed interval [a, b]."""
    return list(range(a - 1, b))


def krylov_last_columns(U: MatrixLike, powers: int) -> list[MatrixLike]:
    """Columns U^j e_n for j = 2..powers."""
    n = U.n
    col = U.column(n - 1)
    out = []
    for _ in range(2, powers + 1):
        col = U @ col
        out.append(col)
    return out


def phi_matrix(U: MatrixLike, k: int, l: int) -> MatrixLike:
    """Phi_kl = [ I^[n-k+1,n] | U^[n-l+1,n] | (U^2)^[n] ... (U^(n-k-l+1))^[n] ]."""
    n = U.n
    blocks = [U.identity_like().columns(_rng(n - k + 1, n)), U.columns(_rng(n - l + 1, n))]
    blocks.extend(krylov_last_columns(U, n - k - l + 1))
    return blocks[0].hstack(*blocks[1:])


def g_matrix(X: MatrixLike, i: int, j: int) -> MatrixLike:
    n = X.n
    return X.submatrix(_rng(i, n), _rng(j, j + n - i))


def h_matrix(Y: MatrixLike, i: int, j: int) -> MatrixLike:
    n = Y.n
    return Y.submatrix(_rng(i, i + n - j), _rng(j, n))


def f_matrix(X: MatrixLike, Y: MatrixLike, k: int, l: int) -> MatrixLike:
    n = X.n
    block = X.columns(_rng(n - k + 1, n)).hstack(Y.columns(_rng(n - l + 1, n)))
    return block.submatrix(_rng(n - k - l + 1, n), range(k + l))


def casimir_values(X: MatrixLike, Y: MatrixLike) -> list:
    """c_0..c_n with det(X + lambda Y) = sum lambda^i s_i c_i."""
    n = X.n
    coeffs = poly_coeffs_from_pencil(X, Y)
    return [a * casimir_sign(n, i) for i, a in enumerate(coeffs)]


class FamilyFunction(BaseModel):
    """A tagged member of F_n (or of the dual family when `on_u` is set).

    Calling it with (X, Y) evaluates at the point of the double; the U-kinds
    are evaluated at U = X^-1 Y. `at_u` evaluates the U-kinds at a given U.
    """

    model_config = ConfigDict(frozen=True)

    kind: Kind
    indices: tuple[int, ...]
    n: int
    on_u: bool = False

    @model_validator(mode="after")
    def validate_indices(self):
        n, idx, kind = self.n, self.indices, self.kind
        ok = True
        if n < 1:
            ok = False
        elif kind == "g":
            ok = len(idx) == 2 and 1 <= idx[1] <= idx[0] <= n
        elif kind == "h":
            ok = len(idx) == 2 and 1 <= idx[0] <= idx[1] <= n
        elif kind == "f":
            ok = len(idx) == 2 and min(idx) >= 1 and sum(idx) <= n - 1
        elif kind in ("phi", "psi"):
            ok = len(idx) == 2 and min(idx) >= 1 and sum(idx) <= n
        elif kind == "c":
            ok = len(idx) == 1 and 0 <= idx[0] <= n
        elif kind == "detU":
            ok = len(idx) == 0
        if not ok:
            raise ValueError(f"indices {idx} out of range for {kind} with n={n}")
        if kind in ("f", "phi", "g") and self.on_u:
            raise ValueError(f"{kind} is not defined on GL_n*")
        return self

    # -- naming -------------------------------------------------------------

    @property
    def label(self) -> str:
        if self.kind == "detU":
            return "detU"
        prefix = self.kind
        if self.on_u and self.kind in ("h", "c"):
            prefix = f"{self.kind}U"
        return "_".join([prefix, *map(str, self.indices)])

    def __str__(self) -> str:
        return self.label

    @property
    def is_casimir(self) -> bool:
        return self.kind == "c"

    @property
    def degree(self) -> int:
        """Total degree along an affine line (in X,Y entries, or U entries when on_u)."""
        n, idx = self.n, self.indices
        if self.kind == "g":
            return n - idx[0] + 1
        if self.kind == "h":
            return n - idx[1] + 1
        if self.kind == "f":
            return idx[0] + idx[1]
        if self.kind == "phi":
            return n * (n - idx[0] - idx[1] + 1)
        if self.kind == "c":
            return idx[0] if self.dual else n
        if self.kind == "psi":
            m = n - idx[0] - idx[1] + 1
            return idx[1] + sum(range(2, m + 1))
        return n  # detU

    # -- evaluation ---------------------------------------------------------

    @property
    def dual(self) -> bool:
        """True for functions of U = X^-1 Y."""
        return self.on_u or self.kind in ("psi", "detU")

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        if self.dual:
            return self.at_u(X.inverse() @ Y)
        kind, idx = self.kind, self.indices
        if kind == "g":
            return g_matrix(X, *idx).det()
        if kind == "h":
            return h_matrix(Y, *idx).det()
        if kind == "f":
            return f_matrix(X, Y, *idx).det()
        if kind == "phi":
            k, l = idx
            m = self.n - k - l + 1
            U = X.inverse() @ Y
            return X.det() ** m * phi_matrix(U, k, l).det() * sign_skl(self.n, k, l)
        return casimir_values(X, Y)[idx[0]]

    def at_u(self, U: MatrixLike):
        """Evaluate a dual-family function at U directly."""
        kind, idx = self.kind, self.indices
        if kind == "psi":
            return phi_matrix(U, *idx).det() * sign_skl(self.n, *idx)
        if kind == "detU":
            return U.det()
        if kind == "h":
            return h_matrix(U, *idx).det()
        if kind == "c":
            return casimir_values(U.identity_like(), U)[idx[0]]
        raise ValueError(f"{self.label} is not a function of U")


def g(n: int, i: int, j: int) -> FamilyFunction:
    return FamilyFunction(kind="g", indices=(i, j), n=n)


def h(n: int, i: int, j: int, on_u: bool = False) -> FamilyFunction:
    return FamilyFunction(kind="h", indices=(i, j), n=n, on_u=on_u)


def f(n: int, k: int, l: int) -> FamilyFunction:
    return FamilyFunction(kind="f", indices=(k, l), n=n)


def phi(n: int, k: int, l: int) -> FamilyFunction:
    return FamilyFunction(kind="phi", indices=(k, l), n=n)


def psi(n: int, k: int, l: int) -> FamilyFunction:
    return FamilyFunction(kind="psi", indices=(k, l), n=n)


def casimir(n: int, r: int, on_u: bool = False) -> FamilyFunction:
    return FamilyFunction(kind="c", indices=(r,), n=n, on_u=on_u)


def det_u(n: int) -> FamilyFunction:
    return FamilyFunction(kind="detU", indices=(), n=n)


def evaluate(fn: Evaluator, X: MatrixLike, Y: MatrixLike):
    """eval(fn, point) with the point given as its two matrices."""
    return fn(X, Y)


def enumerate_family(n: int) -> list[FamilyFunction]:
    """F_n in the fixed order g, h, f, phi, c."""
    if n < 2:
        raise ValueError(f"the family needs n >= 2, got {n}")
    out = [g(n, i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    out += [h(n, i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out += [f(n, k, l) for k in range(1, n - 1) for l in range(1, n - k)]
    out += [phi(n, k, l) for k in range(1, n) for l in range(1, n - k + 1)]
    out += [casimir(n, r) for r in range(1, n)]
    return out


def enumerate_dual_family(n: int) -> list[FamilyFunction]:
    """F*_n: psi_kl, det U = h_11(U), h_ij(U) for 2 <= i <= j <= n, c_r(1, U)."""
    if n < 2:
        raise ValueError(f"the family needs n >= 2, got {n}")
    out = [psi(n, k, l) for k in range(1, n) for l in range(1, n - k + 1)]
    out.append(det_u(n))
    out += [h(n, i, j, on_u=True) for i in range(2, n + 1) for j in range(i, n + 1)]
    out += [casimir(n, r, on_u=True) for r in range(1, n)]
    return out


def family_by_label(n: int, dual: bool = False) -> dict[str, FamilyFunction]:
    fns = enumerate_dual_family(n) if dual else enumerate_family(n)
    return {fn.label: fn for fn in fns}


class LinearCombination:
    """sum c_i * f_i of evaluators; used for corrupted families and bilinearity checks."""

    def __init__(self, terms: Sequence[tuple[Fraction | int, Evaluator]], label: str | None = None):
        self.terms = [(Fraction(c), fn) for c, fn in terms]
        self.label = label or " + ".join(f"{c}*{getattr(fn, 'label', fn)}" for c, fn in self.terms)

    @property
    def degree(self) -> int:
        return max(getattr(fn, "degree", 0) for _, fn in self.terms)

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        total = Fraction(0)
        for c, fn in self.terms:
            total = total + fn(X, Y) * c
        return total


class Product:
    """Pointwise product of evaluators."""

    def __init__(self, *factors: Evaluator):
        self.factors = factors
        self.label = "*".join(str(getattr(fn, "label", fn)) for fn in factors)

    @property
    def degree(self) -> int:
        return sum(getattr(fn, "degree", 0) for fn in self.factors)

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        result: Fraction | Jet = Fraction(1)
        for fn in self.factors:
            result = result * fn(X, Y)
        return result


class Entry:
    """Coordinate function x_ij (which="X") or y_ij (which="Y"), 1-based."""

    def __init__(self, which: Literal["X", "Y"], i: int, j: int):
        self.which, self.i, self.j = which, i, j
        self.label = f"{which.lower()}_{i}_{j}"
        self.degree = 1

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        M = X if self.which == "X" else Y
        return M[self.i - 1, self.j - 1]


def corrupted_family(n: int) -> list[Evaluator]:
    """F_n with phi_11 replaced by phi_11 + g_11 (debug: must fail log-canonicality)."""
    out: list[Evaluator] = []
    for fn in enumerate_family(n):
        if fn.label == "phi_1_1":
            out.append(LinearCombination([(1, fn), (1, g(n, 1, 1))], label="phi_1_1+g_1_1"))
        else:
            out.append(fn)
    return out
