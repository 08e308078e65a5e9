import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from qf.algebra.laurent import LaurentPoly
from qf.algebra.ring import FiniteRing, RingElement
from qf.core.config import resolve_cap
from qf.core.errors import check_cap

logger = logging.getLogger(__name__)

Entry = Union[LaurentPoly, RingElement]


@dataclass(frozen=True)
class RingMatrix:
    """Labeled rectangular matrix over a FiniteRing, or over Z[T,T^-1] when ring is None."""

    entries: Tuple[Tuple[Entry, ...], ...]
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    ring: Optional[FiniteRing] = None

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row labels must match the number of rows")
        if any(len(r) != len(self.col_labels) for r in self.entries):
            raise ValueError("every row must have one entry per column label")
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError("row labels must be unique")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("column labels must be unique")

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def entry(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[Entry, ...]:
        return tuple(row[j] for row in self.entries)

    def permute(self, rows: Optional[Sequence[str]] = None, cols: Optional[Sequence[str]] = None) -> "RingMatrix":
        rows = tuple(rows) if rows is not None else self.row_labels
        cols = tuple(cols) if cols is not None else self.col_labels
        if sorted(rows) != sorted(self.row_labels) or sorted(cols) != sorted(self.col_labels):
            raise ValueError("permutation must use every label exactly once")
        ri = [self.row_labels.index(r) for r in rows]
        ci = [self.col_labels.index(c) for c in cols]
        entries = tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        return RingMatrix(entries, rows, cols, self.ring)

    def delete(self, row: int, col: int) -> "RingMatrix":
        entries = tuple(
            tuple(e for j, e in enumerate(r) if j != col) for i, r in enumerate(self.entries) if i != row
        )
        rows = tuple(l for i, l in enumerate(self.row_labels) if i != row)
        cols = tuple(l for j, l in enumerate(self.col_labels) if j != col)
        return RingMatrix(entries, rows, cols, self.ring)

    def specialize(self, ring: FiniteRing) -> "RingMatrix":
        if self.ring is not None:
            raise ValueError("only Laurent matrices can be specialized")
        entries = tuple(tuple(ring.from_laurent(e) for e in r) for r in self.entries)
        return RingMatrix(entries, self.row_labels, self.col_labels, ring)

    def left_multiply(self, vector: Sequence[RingElement]) -> Tuple[RingElement, ...]:
        """v.M for a row vector v over self.ring."""
        if self.ring is None:
            raise ValueError("left_multiply needs a matrix over a finite ring")
        if len(vector) != len(self.row_labels):
            raise ValueError("vector length must equal the number of rows")
        out = []
        for j in range(len(self.col_labels)):
            acc = self.ring.zero
            for i, v in enumerate(vector):
                e = self.entries[i][j]
                if not e.is_zero() and not v.is_zero():
                    acc = acc + v * e
            out.append(acc)
        return tuple(out)

    def to_grid(self) -> List[List[str]]:
        return [[str(e) for e in r] for r in self.entries]

    def format_table(self) -> str:
        grid = [[""] + list(self.col_labels)] + [
            [lbl] + cells for lbl, cells in zip(self.row_labels, self.to_grid())
        ]
        widths = [max(len(row[j]) for row in grid) for j in range(len(grid[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in grid)


def column_reduce(M: RingMatrix, k: int) -> RingMatrix:
    """Gauss-Jordan on columns over Z[T,T^-1] until the top k rows read [I | 0].

    Pivot (i, i) must be a unit +-T^e for i < k.
    """
    if M.ring is not None:
        raise ValueError("column_reduce works over Z[T,T^-1]")
    rows, cols = M.shape
    if k > min(rows, cols):
        raise ValueError("k must not exceed the matrix dimensions")
    cols_data: List[List[LaurentPoly]] = [list(M.column(j)) for j in range(cols)]
    for p in range(k):
        pivot = cols_data[p][p]
        if not pivot.is_unit():
            raise ValueError(f"pivot ({M.row_labels[p]}, {M.col_labels[p]}) = {pivot} is not a unit")
        inv = pivot.unit_inverse()
        cols_data[p] = [e * inv for e in cols_data[p]]
        for j in range(cols):
            if j == p:
                continue
            factor = cols_data[j][p]
            if factor.is_zero():
                continue
            cols_data[j] = [a - factor * b for a, b in zip(cols_data[j], cols_data[p])]
    entries = tuple(tuple(cols_data[j][i] for j in range(cols)) for i in range(rows))
    return RingMatrix(entries, M.row_labels, M.col_labels, None)


def laurent_det(M: RingMatrix) -> LaurentPoly:
    rows, cols = M.shape
    if rows != cols:
        raise ValueError("determinant needs a square matrix")
    if rows == 0:
        return LaurentPoly.const(1)
    # clear negative powers column by column, then undo the shift
    shifts = []
    for j in range(cols):
        lows = [e.min_degree for e in M.column(j) if not e.is_zero()]
        shifts.append(max(0, -min(lows)) if lows else 0)
    mat = sympy.Matrix(rows, cols, lambda i, j: M.entry(i, j).shift(shifts[j]).to_sympy())
    det = sympy.expand(mat.det(method="berkowitz"))
    return LaurentPoly.from_sympy(det).shift(-sum(shifts))


@dataclass(frozen=True)
class KernelReport:
    pivots: Tuple[Tuple[str, str], ...]
    free_rows: Tuple[str, ...]
    candidates: int


def _eliminate(M: RingMatrix):
    n_rows, n_cols = M.shape
    work = [list(r) for r in M.entries]
    active_rows = list(range(n_rows))
    active_cols = list(range(n_cols))
    steps = []  # (row, [(other_row, coef)])
    pivots = []
    while True:
        found = None
        for j in active_cols:
            for i in active_rows:
                e = work[i][j]
                if not e.is_zero() and e.is_unit():
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            break
        i0, j0 = found
        u_inv = work[i0][j0].inverse()
        others = [i for i in active_rows if i != i0]
        # v_i0 = sum_i coef_i v_i
        coefs = [(i, -(work[i][j0] * u_inv)) for i in others]
        steps.append((i0, coefs))
        pivots.append((M.row_labels[i0], M.col_labels[j0]))
        for i in others:
            f = work[i][j0] * u_inv
            if f.is_zero():
                continue
            for j in active_cols:
                if j != j0 and not work[i0][j].is_zero():
                    work[i][j] = work[i][j] - f * work[i0][j]
        active_rows.remove(i0)
        active_cols.remove(j0)
        logger.debug("kernel pivot at (%s, %s)", M.row_labels[i0], M.col_labels[j0])
    return work, active_rows, active_cols, steps, pivots


def kernel_with_report(M: RingMatrix, *, max_enum: Optional[int] = None):
    if M.ring is None:
        raise ValueError("kernel needs a matrix over a finite ring")
    ring = M.ring
    n_rows, _ = M.shape
    work, free, live_cols, steps, pivots = _eliminate(M)
    candidates = ring.size ** len(free)
    check_cap(candidates, resolve_cap(max_enum), "kernel enumeration")
    elements = ring.elements()
    solutions = []
    for choice in itertools.product(elements, repeat=len(free)):
        ok = True
        for j in live_cols:
            acc = ring.zero
            for i, v in zip(free, choice):
                if not v.is_zero() and not work[i][j].is_zero():
                    acc = acc + v * work[i][j]
            if not acc.is_zero():
                ok = False
                break
        if not ok:
            continue
        vec: List[Optional[RingElement]] = [None] * n_rows
        for i, v in zip(free, choice):
            vec[i] = v
        for i0, coefs in reversed(steps):
            acc = ring.zero
            for i, c in coefs:
                acc = acc + vec[i] * c
            vec[i0] = acc
        solutions.append(tuple(vec))
    solutions.sort(key=lambda v: tuple(e.coeffs for e in v))
    report = KernelReport(tuple(pivots), tuple(M.row_labels[i] for i in free), candidates)
    logger.info("kernel: %d solutions from %d candidates (%d pivots)", len(solutions), candidates, len(pivots))
    return solutions, report


def kernel(M: RingMatrix, *, max_enum: Optional[int] = None) -> List[Tuple[RingElement, ...]]:
    """All row vectors v with v.M = 0, sorted lexicographically by coefficients."""
    return kernel_with_report(M, max_enum=max_enum)[0]
