"""Polynomial matrices and shifted weak Popov reduction.

A :class:`PolyMatrix` stores its entries as one dense ``(rows, cols, length)``
coefficient array so that a simple transformation
``row_i <- row_i - c * x**delta * row_j`` is a single vectorised field
operation.  Pivots follow the rightmost convention: the pivot of a row is the
largest column index attaining its shifted degree ``max_j(deg a_j + s_j)``.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .ff import Field
from .poly import Poly

_ZERO_DEG = -(1 << 40)  # stands in for deg 0 = -inf inside integer arrays


class DegenerateInputError(ValueError):
    """Raised when reduction produces a zero row (input not of full rank)."""


def _entry_degrees(block: np.ndarray) -> np.ndarray:
    """Degrees along the last axis, ``_ZERO_DEG`` for zero entries."""
    nz = block != 0
    L = block.shape[-1]
    if L == 0:
        return np.full(block.shape[:-1], _ZERO_DEG, dtype=np.int64)
    last = L - 1 - np.argmax(nz[..., ::-1], axis=-1)
    return np.where(nz.any(axis=-1), last, _ZERO_DEG).astype(np.int64)


class PolyMatrix:
    """Rectangular matrix of polynomials over one field."""

    def __init__(self, field: Field, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim != 3:
            raise ValueError("coefficient array must be 3-dimensional")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows of unequal length")
        field = rows[0][0].field
        if any(p.field != field for r in rows for p in r):
            raise ValueError("entries over different fields")
        L = max(max(len(p.coeffs) for r in rows for p in r), 1)
        c = np.zeros((len(rows), ncols, L), dtype=np.int64)
        for i, r in enumerate(rows):
            for j, p in enumerate(r):
                c[i, j, : len(p.coeffs)] = p.coeffs
        return cls(field, c)

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape[0], self.coeffs.shape[1]

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return Poly._raw(self.field, self.coeffs[i, j].copy())

    def row(self, i: int) -> list[Poly]:
        return [self[i, j] for j in range(self.shape[1])]

    def rows(self) -> list[list[Poly]]:
        return [self.row(i) for i in range(self.shape[0])]

    def degrees(self) -> np.ndarray:
        """Entry degrees, with ``-inf`` replaced by a large negative integer."""
        return _entry_degrees(self.coeffs)

    def evaluate(self, x0: int) -> np.ndarray:
        """Scalar matrix obtained by evaluating every entry at x0."""
        F = self.field
        acc = np.zeros(self.shape, dtype=np.int64)
        for d in range(self.coeffs.shape[2] - 1, -1, -1):
            acc = F.add(F.mul(acc, x0), self.coeffs[:, :, d])
        return acc

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix) or other.shape != self.shape:
            return NotImplemented
        return self.field == other.field and all(
            self[i, j] == other[i, j] for i in range(self.shape[0]) for j in range(self.shape[1])
        )

    def __repr__(self):
        return "PolyMatrix(" + repr([[p.tolist() for p in r] for r in self.rows()]) + ")"


def _stats(deg: np.ndarray, shifts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    sd = deg + shifts
    ncols = sd.shape[-1]
    rd = sd.max(axis=-1)
    piv = ncols - 1 - np.argmax(sd[..., ::-1], axis=-1)
    return rd, piv


def shifted_row_stats(row: Sequence[Poly], shifts: Sequence[int]) -> tuple[int, int]:
    """Shifted degree and (rightmost) pivot index of a nonzero row.

    >>> from powerdecoding.ff import Field
    >>> F = Field(5); x = Poly.x(F)
    >>> shifted_row_stats([Poly.one(F), x], [2, 0])
    (2, 0)
    """
    if len(row) != len(shifts):
        raise ValueError("shift vector length differs from row length")
    if all(p.is_zero for p in row):
        raise ValueError("shifted degree of the zero row is undefined")
    sd = [p.degree + s for p, s in zip(row, shifts)]
    d = max(sd)
    return int(d), max(j for j, v in enumerate(sd) if v == d)


def pivots(M: PolyMatrix, shifts: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Per-row ``(shifted degrees, pivot indices)`` of a matrix without zero rows."""
    s = np.asarray(shifts, dtype=np.int64)
    if len(s) != M.shape[1]:
        raise ValueError("shift vector length differs from column count")
    return _stats(M.degrees(), s)


def weak_popov(
    M: PolyMatrix,
    shifts: Sequence[int],
    on_step: Callable[[np.ndarray, np.ndarray], None] | None = None,
) -> PolyMatrix:
    """Mulders-Storjohann reduction to shifted weak Popov form.

    While two rows share a pivot column, the row of larger shifted degree is
    reduced by the other (ties: the lower row index is the reducer), which
    strictly lowers its shifted degree or moves its pivot left.  ``on_step``
    is called with the current shifted row degrees and pivots after each
    transformation.  The input is left untouched.
    """
    F = M.field
    s = np.asarray(shifts, dtype=np.int64)
    nrows, ncols = M.shape
    if len(s) != ncols:
        raise ValueError("shift vector length differs from column count")
    deg = M.degrees()
    if np.any((deg == _ZERO_DEG).all(axis=1)):
        raise DegenerateInputError("input has a zero row")
    rd, piv = _stats(deg, s)
    # shifted row degrees never increase, so this length bounds every entry
    L = int(rd.max() - s.min() + 1)
    A = np.zeros((nrows, ncols, L), dtype=np.int64)
    w = min(L, M.coeffs.shape[2])
    A[:, :, :w] = M.coeffs[:, :, :w]

    while True:
        owner: dict[int, int] = {}
        pair = None
        for r in range(nrows):
            p = int(piv[r])
            if p in owner:
                pair = (owner[p], r)
                break
            owner[p] = r
        if pair is None:
            break
        a, b = pair
        # reducer j has the lower shifted degree; ties go to the lower index
        j, i = (a, b) if rd[a] <= rd[b] else (b, a)
        p = int(piv[i])
        delta = int(deg[i, p] - deg[j, p])
        c = F.div(A[i, p, deg[i, p]], A[j, p, deg[j, p]])
        A[i, :, delta:] = F.sub(A[i, :, delta:], F.mul(A[j, :, : L - delta], c))
        deg[i] = _entry_degrees(A[i])
        if np.all(deg[i] == _ZERO_DEG):
            raise DegenerateInputError("row reduced to zero: input is rank deficient")
        rd[i], piv[i] = _stats(deg[i], s)
        if on_step is not None:
            on_step(rd.copy(), piv.copy())

    Lout = max(int(deg.max()) + 1, 1)
    return PolyMatrix(F, A[:, :, :Lout].copy())


def minimal_row(M: PolyMatrix, shifts: Sequence[int], pivot_wanted: int) -> list[Poly]:
    """The row of a weak Popov matrix whose pivot is ``pivot_wanted``.

    Among all module elements with that pivot, it has minimal shifted degree.
    """
    _, piv = pivots(M, shifts)
    hits = np.flatnonzero(piv == pivot_wanted)
    if len(hits) == 0:
        raise ValueError(f"no row with pivot {pivot_wanted}")
    if len(hits) > 1:
        raise ValueError("matrix is not in weak Popov form")
    return M.row(int(hits[0]))


def is_weak_popov(M: PolyMatrix, shifts: Sequence[int]) -> bool:
    _, piv = pivots(M, shifts)
    return len(set(piv.tolist())) == len(piv)


def has_competing_minimal(M: PolyMatrix, shifts: Sequence[int], pivot: int, column: int = 0) -> bool:
    """Whether the minimal pivot-``pivot`` element of the row space is ambiguous.

    For M in shifted weak Popov form, the elements with that pivot and minimal
    shifted degree are ``b + sum a_i b_i`` with ``deg a_i < deg_s b - deg_s b_i``,
    where b is the pivot row.  Their entries in ``column`` are all scalar
    multiples of b's exactly when no row of smaller shifted degree has a
    nonzero entry there.
    """
    rd, piv = pivots(M, shifts)
    (i0,) = np.flatnonzero(piv == pivot)
    deg = M.degrees()
    others = np.arange(M.shape[0]) != i0
    return bool(np.any(others & (rd < rd[i0]) & (deg[:, column] != _ZERO_DEG)))
