"""Exact rational row spaces in reduced row-echelon form.

Scalars are ``fractions.Fraction`` throughout: always in lowest terms with a
positive denominator, and no operation ever rounds.  A subspace is stored as
its RREF grid, which is a canonical representative, so span equality is a
literal grid comparison instead of a pair of containment checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _as_row(vec):
    return tuple(Fraction(c) for c in vec)


@dataclass(frozen=True)
class RowBasis:
    """RREF basis of a row space: nonzero rows, unit pivots strictly moving
    right, pivot columns cleared above and below.  Row count equals rank."""

    ncols: int
    rows: tuple

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivot_columns(self) -> tuple:
        cols = []
        for row in self.rows:
            for j, c in enumerate(row):
                if c != 0:
                    cols.append(j)
                    break
        return tuple(cols)


def rref(rows, ncols: int | None = None) -> RowBasis:
    """Reduced row-echelon basis of the span of ``rows``.

    ``ncols`` is only needed when ``rows`` is empty; otherwise it is inferred
    and every row must have that length.
    """
    mat = [list(_as_row(r)) for r in rows]
    if not mat:
        if ncols is None:
            raise ValueError("rref of no rows needs an explicit column count")
        return RowBasis(ncols, ())
    width = len(mat[0])
    if ncols is not None and ncols != width:
        raise ValueError("declared column count %d != row length %d" % (ncols, width))
    if width < 1:
        raise ValueError("rows must have length >= 1")
    for r in mat:
        if len(r) != width:
            raise ValueError("ragged input: row lengths differ")

    pivot_row = 0
    for col in range(width):
        src = None
        for i in range(pivot_row, len(mat)):
            if mat[i][col] != 0:
                src = i
                break
        if src is None:
            continue
        mat[pivot_row], mat[src] = mat[src], mat[pivot_row]
        inv = 1 / mat[pivot_row][col]
        mat[pivot_row] = [c * inv for c in mat[pivot_row]]
        for i in range(len(mat)):
            if i != pivot_row and mat[i][col] != 0:
                f = mat[i][col]
                row_p = mat[pivot_row]
                mat[i] = [a - f * b for a, b in zip(mat[i], row_p)]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    kept = tuple(tuple(r) for r in mat[:pivot_row] if any(c != 0 for c in r))
    return RowBasis(width, kept)


def contains(basis: RowBasis, vec) -> bool:
    """True iff ``vec`` lies in the row span: the residual after eliminating
    against every pivot is zero."""
    v = list(_as_row(vec))
    if len(v) != basis.ncols:
        raise ValueError("vector length %d != column count %d" % (len(v), basis.ncols))
    for row, col in zip(basis.rows, basis.pivot_columns()):
        f = v[col]
        if f != 0:
            v = [a - f * b for a, b in zip(v, row)]
    return all(c == 0 for c in v)


def spaces_equal(a: RowBasis, b: RowBasis) -> bool:
    """Span equality, exact because RREF is canonical."""
    if a.ncols != b.ncols:
        raise ValueError("column counts differ: %d vs %d" % (a.ncols, b.ncols))
    return a.rows == b.rows
