"""Immutable exact rational matrices and the fraction-free determinant kernel."""
from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterable, Sequence

from gldouble.errors import DimensionError, SingularMatrixError

Scalar = Fraction
Row = tuple[Fraction, ...]


def to_scalar(value) -> Fraction:
    """Coerce ints, strings like "3/4" and Fractions to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class MatrixLike(ABC):
    """Interface shared by `Mat` and `JetMat` so evaluators are written once."""

    @property
    @abstractmethod
    def shape(self) -> tuple[int, int]:
        """(rows, cols)."""

    @abstractmethod
    def __getitem__(self, index: tuple[int, int]):
        """Single entry, 0-based."""

    @abstractmethod
    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> MatrixLike:
        """Rows and columns picked by 0-based index lists, order preserved."""

    @abstractmethod
    def hstack(self, *others: MatrixLike) -> MatrixLike:
        """Concatenate column blocks left to right."""

    @abstractmethod
    def det(self):
        """Exact determinant."""

    @abstractmethod
    def inverse(self) -> MatrixLike:
        """Exact inverse."""

    @abstractmethod
    def identity_like(self) -> MatrixLike:
        """Identity of the same size and kind."""

    @property
    def n(self) -> int:
        rows, cols = self.shape
        if rows != cols:
            raise DimensionError(f"matrix is not square (shape = {self.shape})")
        return rows

    def power(self, k: int) -> MatrixLike:
        """M^k by repeated multiplication; M^0 is the identity."""
        if k < 0:
            raise DimensionError(f"matrix power must be non-negative, got {k}")
        result = self.identity_like()
        for _ in range(k):
            result = result @ self
        return result

    def column(self, j: int) -> MatrixLike:
        rows, _ = self.shape
        return self.submatrix(range(rows), [j])

    def columns(self, cols: Sequence[int]) -> MatrixLike:
        rows, _ = self.shape
        return self.submatrix(range(rows), cols)


class Mat(MatrixLike):
    """Dense immutable matrix of Fractions."""

    __slots__ = ("_data", "_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_scalar(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise DimensionError("ragged rows in matrix literal")
        self._data = data
        self._rows = len(data)
        self._cols = ncols

    @classmethod
    def _wrap(cls, data: tuple[Row, ...], cols: int | None = None) -> Mat:
        obj = cls.__new__(cls)
        obj._data = data
        obj._rows = len(data)
        obj._cols = cols if cols is not None else (len(data[0]) if data else 0)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> Mat:
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        zero = Fraction(0)
        return cls._wrap(tuple((zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Mat:
        """Matrix unit E_ij (0-based) of size n."""
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(
            tuple(tuple(one if (a, b) == (i, j) else zero for b in range(n)) for a in range(n)), n
        )

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> Mat:
        return cls(zip(*cols)) if cols else cls([])

    @classmethod
    def diagonal(cls, entries: Sequence) -> Mat:
        n = len(entries)
        zero = Fraction(0)
        return cls._wrap(
            tuple(tuple(to_scalar(entries[i]) if i == j else zero for j in range(n)) for i in range(n)), n
        )

    # -- structure ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def rows(self) -> tuple[Row, ...]:
        return self._data

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Mat[{body}]"

    def to_strings(self) -> list[list[str]]:
        """Entries as "p/q" strings, row-major."""
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self._data]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Mat:
        cols = list(cols)
        return Mat._wrap(tuple(tuple(self._data[i][j] for j in cols) for i in rows), len(cols))

    def hstack(self, *others: MatrixLike) -> MatrixLike:
        from gldouble.exact.jet import JetMat

        if any(isinstance(o, JetMat) for o in others):
            return JetMat.lift(self).hstack(*others)
        blocks = (self,) + others
        if len({b.shape[0] for b in blocks}) != 1:
            raise DimensionError("hstack blocks have different row counts")
        data = tuple(sum((b._data[i] for b in blocks), ()) for i in range(self._rows))
        return Mat._wrap(data, sum(b._cols for b in blocks))

    def identity_like(self) -> Mat:
        return Mat.identity(self.n)

    @property
    def T(self) -> Mat:
        return Mat._wrap(tuple(zip(*self._data)), self._rows)

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(self.n)), Fraction(0))

    def is_upper_triangular(self) -> bool:
        return all(self._data[i][j] == 0 for i in range(self._rows) for j in range(min(i, self._cols)))

    def is_lower_triangular(self) -> bool:
        return self.T.is_upper_triangular()

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: MatrixLike) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self._cols
        )

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self._cols
        )

    def __neg__(self) -> Mat:
        return Mat._wrap(tuple(tuple(-a for a in r) for r in self._data), self._cols)

    def scale(self, c) -> Mat:
        c = to_scalar(c)
        return Mat._wrap(tuple(tuple(c * a for a in r) for r in self._data), self._cols)

    def __mul__(self, c):
        from gldouble.exact.jet import Jet, JetMat

        if isinstance(c, Jet):
            return JetMat.lift(self) * c
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        from gldouble.exact.jet import JetMat

        if isinstance(other, JetMat):
            return JetMat(self @ other.val, self @ other.der)
        if not isinstance(other, Mat):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = tuple(zip(*other._data))
        return Mat._wrap(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in other_cols) for row in self._data),
            other._cols,
        )

    # -- determinants and inverses -----------------------------------------

    def det(self) -> Fraction:
        n = self.n
        a = self._data
        if n == 0:
            return Fraction(1)
        if n == 1:
            return a[0][0]
        if n == 2:
            return a[0][0] * a[1][1] - a[0][1] * a[1][0]
        if n == 3:
            return (
                a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
            )
        return _bareiss_det(a)

    def minor(self, i: int, j: int) -> Mat:
        """Matrix with row i and column j removed."""
        n = self.n
        return self.submatrix([r for r in range(n) if r != i], [c for c in range(n) if c != j])

    def adjugate(self) -> Mat:
        """Classical adjoint; M @ adj(M) = det(M) I holds for singular M too."""
        n = self.n
        if n == 1:
            return Mat.identity(1)
        d = self.det()
        if d != 0:
            return self.inverse().scale(d)
        cof = [[(-1) ** (i + j) * self.minor(i, j).det() for j in range(n)] for i in range(n)]
        return Mat(cof).T

    def inverse(self) -> Mat:
        n = self.n
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self._data)]
        for i in range(n):
            for j in range(i, n):
                if work[j][i] != 0:
                    if j != i:
                        work[i], work[j] = work[j], work[i]
                    break
            else:
                raise SingularMatrixError("matrix is singular", det=Fraction(0))
            pivot = work[i][i]
            work[i] = [x / pivot for x in work[i]]
            for r in range(n):
                if r != i and work[r][i] != 0:
                    factor = work[r][i]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[i])]
        return Mat._wrap(tuple(tuple(row[n:]) for row in work), n)


def _bareiss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free elimination with full pivot search."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        pivot = next(((i, j) for i in range(k, n) for j in range(k, n) if a[i][j] != 0), None)
        if pivot is None:
            return Fraction(0)
        pi, pj = pivot
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - aik * row_k[j]) / prev
        prev = pk
    return sign * a[n - 1][n - 1]


def det(M: MatrixLike):
    """Exact determinant of a Mat (Fraction) or JetMat (Jet)."""
    return M.det()


def adjugate(M: Mat) -> Mat:
    return M.adjugate()


def inverse(M: MatrixLike) -> MatrixLike:
    return M.inverse()


def matpow(M: MatrixLike, k: int) -> MatrixLike:
    return M.power(k)
