"""Alexander matrices of diagrams and the matrix form of cocycle contributions.

Rows are arcs, columns are crossings. Column i holds T^eps in the row of
the in-coming under-arc, 1 - T^eps in the row of the over-arc and -1 in the
row of the out-going under-arc, added where rows coincide. A row vector y
of colors in an Alexander quandle is a coloring exactly when y.A = 0.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from qf.algebra.laurent import ONE, LaurentPoly, t_power
from qf.algebra.matrix import RingMatrix, kernel
from qf.algebra.ring import FiniteRing, RingElement, family_ring, ideal_kind, section, strip_ideal_factor
from qf.core.errors import NotAKernelVector
from qf.extensions.abelian import ring_of
from qf.invariants.colorings import Coloring
from qf.links.diagram import LinkDiagram, component_crossing_sets
from qf.quandles.families import alexander_quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlexanderMatrix:
    matrix: RingMatrix
    signs: Tuple[int, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def specialize(self, ring: FiniteRing) -> RingMatrix:
        return self.matrix.specialize(ring)

    def format_table(self) -> str:
        return self.matrix.format_table()


def alexander_matrix(D: LinkDiagram) -> AlexanderMatrix:
    rows = {a: i for i, a in enumerate(D.arcs)}
    cols: List[Dict[int, LaurentPoly]] = []
    for c in D.crossings:
        col: Dict[int, LaurentPoly] = {}
        te = t_power(c.sign)
        for row, value in ((rows[c.under_in], te), (rows[c.over], ONE - te), (rows[c.under_out], -ONE)):
            col[row] = col.get(row, LaurentPoly()) + value
        cols.append(col)
    zero = LaurentPoly()
    entries = tuple(tuple(col.get(i, zero) for col in cols) for i in range(len(D.arcs)))
    M = RingMatrix(entries, D.arcs, tuple(c.id for c in D.crossings))
    return AlexanderMatrix(M, tuple(c.sign for c in D.crossings))


def deleted_minor(A: AlexanderMatrix, j: int) -> RingMatrix:
    """A with its j-th row and j-th column removed (0-based)."""
    rows, cols = A.shape
    if not (0 <= j < min(rows, cols)):
        raise ValueError(f"j must lie in 0..{min(rows, cols) - 1}")
    return A.matrix.delete(j, j)


def kernel_colorings(D: LinkDiagram, r: FiniteRing, *, max_enum: Optional[int] = None) -> List[Coloring]:
    """Colorings by the Alexander quandle on r, read off the left kernel."""
    X = alexander_quandle(r)
    M = alexander_matrix(D).specialize(r)
    out = [Coloring(D, X, tuple(r.index_of(e) for e in v)) for v in kernel(M, max_enum=max_enum)]
    out.sort(key=lambda C: C.colors)
    logger.info("%s over %s: %d kernel colorings", D.name, r.describe(), len(out))
    return out


def _tower(C: Coloring) -> Tuple[FiniteRing, FiniteRing]:
    R = ring_of(C.quandle)
    if R.family not in ("W", "U"):
        raise ValueError("contributions need a coloring by W_m or U_m")
    q = R.q if R.family == "W" else R.base
    return R, family_ring(R.family, q, R.level + 1)


def section_vector(C: Coloring) -> Tuple[RingElement, ...]:
    R, E = _tower(C)
    return tuple(section(C.quandle.element(c), E) for c in C.colors)


def matrix_contribution(C: Coloring, D: Optional[LinkDiagram] = None) -> Tuple[int, ...]:
    """Per-component exponents sum(eta(tau_j) z_j / ideal) with z = s(w).A over the next ring.

    eta is 1 at positive and T at negative crossings.
    """
    D = D or C.diagram
    R, E = _tower(C)
    A = alexander_matrix(D)
    w = tuple(C.quandle.element(c) for c in C.colors)
    residual = A.specialize(R).left_multiply(w)
    bad = [D.crossings[j].id for j, e in enumerate(residual) if not e.is_zero()]
    if bad:
        raise NotAKernelVector("w.A is non-zero over the coloring ring", witness=bad)
    z = A.specialize(E).left_multiply(section_vector(C))
    kind = ideal_kind(E)
    stripped: Dict[str, int] = {}
    for c, zj in zip(D.crossings, z):
        eta_z = zj if c.sign > 0 else E.T * zj
        stripped[c.id] = strip_ideal_factor(eta_z, kind)
    q = R.q if R.family == "W" else R.base
    return tuple(sum(stripped[c.id] for c in group) % q for group in component_crossing_sets(D))


def z_vector(C: Coloring) -> Tuple[RingElement, ...]:
    """s(w).A over the next ring of the tower."""
    _, E = _tower(C)
    return alexander_matrix(C.diagram).specialize(E).left_multiply(section_vector(C))
