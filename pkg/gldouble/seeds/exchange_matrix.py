"""Extended exchange matrices and their correspondence with quivers."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from gldouble.errors import StructuralError
from gldouble.seeds.quiver import Quiver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """Integer matrix B~ with rows on mutable vertices and columns on mutable then stable vertices.

    Entries in mutable columns carry the factor d_i of their row; stable
    columns hold plain arrow counts.
    """

    rows: tuple[str, ...]
    stable: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @property
    def columns(self) -> tuple[str, ...]:
        return self.rows + self.stable

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def row_index(self, label: str) -> int:
        try:
            return self.rows.index(label)
        except ValueError:
            raise StructuralError(f"{label} is not a mutable vertex") from None

    def entry(self, row: str, col: str) -> int:
        return self.entries[self.row_index(row)][self.columns.index(col)]

    def row(self, label: str) -> dict[str, int]:
        return dict(zip(self.columns, self.entries[self.row_index(label)]))

    def order(self, label: str) -> int:
        return self.d[self.row_index(label)]

    def principal(self) -> list[list[int]]:
        m = len(self.rows)
        return [list(r[:m]) for r in self.entries]

    def rescaled_principal(self) -> list[list[Fraction]]:
        """Principal part with row i divided by d_i."""
        return [[Fraction(b, di) for b in row] for row, di in zip(self.principal(), self.d)]

    def is_skew_symmetrizable(self) -> bool:
        R = self.rescaled_principal()
        m = len(R)
        return all(R[i][j] == -R[j][i] for i in range(m) for j in range(m))

    def row_gcd(self, label: str) -> int:
        """gcd of the mutable-column entries of a row."""
        i = self.row_index(label)
        return gcd(*self.entries[i][: len(self.rows)])

    def order_divides_row(self, label: str) -> bool:
        g = self.row_gcd(label)
        return g == 0 or g % self.order(label) == 0

    def validate(self) -> None:
        if not self.is_skew_symmetrizable():
            raise StructuralError("rescaled principal part is not skew-symmetric")
        for label in self.rows:
            if not self.order_divides_row(label):
                raise StructuralError(f"d_{label} = {self.order(label)} does not divide its row gcd")

    def with_entries(self, entries: Sequence[Sequence[int]]) -> ExtendedExchangeMatrix:
        return ExtendedExchangeMatrix(
            rows=self.rows, stable=self.stable, entries=tuple(tuple(r) for r in entries), d=self.d
        )

    def to_lists(self) -> dict:
        return {
            "rows": list(self.rows),
            "columns": list(self.columns),
            "d": list(self.d),
            "entries": [list(r) for r in self.entries],
        }


def to_Btilde(q: Quiver) -> ExtendedExchangeMatrix:
    """B~ of a quiver: b_ij = d_i (#(i->j) - #(j->i)) on mutable columns, unscaled on stable ones.

    Raises:
        StructuralError: The rescaled principal part is not skew-symmetric
    """
    rows = tuple(q.mutable)
    stable = tuple(q.stable)
    orders = q.orders()
    entries = []
    for i in rows:
        di = orders[i]
        row = [di * (q.multiplicity(i, j) - q.multiplicity(j, i)) for j in rows]
        row += [q.multiplicity(i, j) - q.multiplicity(j, i) for j in stable]
        entries.append(tuple(row))
    B = ExtendedExchangeMatrix(rows=rows, stable=stable, entries=tuple(entries), d=tuple(orders[i] for i in rows))
    B.validate()
    return B


def quiver_from_btilde(B: ExtendedExchangeMatrix, template: Quiver) -> Quiver:
    """The quiver representing (B~, d) on the vertices of `template`.

    Stable-to-stable arrows are not recorded in B~ and are dropped.
    """
    out = Quiver(template.vertices)
    m = len(B.rows)
    for i, label in enumerate(B.rows):
        row = B.entries[i]
        for j in range(i + 1, m):
            b = row[j] // B.d[i]
            if b > 0:
                out.add_arrow(label, B.rows[j], b)
            elif b < 0:
                out.add_arrow(B.rows[j], label, -b)
        for j, col in enumerate(B.stable, start=m):
            b = row[j]
            if b > 0:
                out.add_arrow(label, col, b)
            elif b < 0:
                out.add_arrow(col, label, -b)
    return out
