import itertools
import logging
from typing import List, Optional, Union

import sympy

from qf.algebra.laurent import T, LaurentPoly
from qf.algebra.matrix import RingMatrix, laurent_det
from qf.core.errors import InfiniteModule, NotAKnot
from qf.alexander.matrix import alexander_matrix, deleted_minor
from qf.links.diagram import LinkDiagram

logger = logging.getLogger(__name__)


def to_gf_poly(f: LaurentPoly, p: int) -> sympy.Poly:
    """f over F_p with its T-power cleared, so the constant term is non-zero."""
    g = f.reduce_mod(p).normalized()
    if g.is_zero():
        return sympy.Poly(0, T, modulus=p)
    return sympy.Poly(list(reversed(g.coefficient_list())), T, modulus=p)


def _minor(P: RingMatrix, rows, cols) -> LaurentPoly:
    entries = tuple(tuple(P.entry(i, j) for j in cols) for i in rows)
    sub = RingMatrix(entries, tuple(P.row_labels[i] for i in rows), tuple(P.col_labels[j] for j in cols))
    return laurent_det(sub)


def _gcd_all(polys, p: int) -> sympy.Poly:
    acc = sympy.Poly(0, T, modulus=p)
    for f in polys:
        if f.is_zero:
            continue
        acc = f if acc.is_zero else acc.gcd(f)
        if acc.degree() == 0:
            break
    return acc.monic() if not acc.is_zero else acc


def presentation_matrix(D: LinkDiagram) -> RingMatrix:
    """The (n-1)x(n-1) Alexander matrix with its last row and column deleted."""
    A = alexander_matrix(D)
    n = A.shape[1]
    return deleted_minor(A, n - 1)


def invariant_factors(D: LinkDiagram, p: int) -> List[sympy.Poly]:
    """e_0, ..., e_{n-2} over F_p[T] from the minor gcds of the presentation matrix."""
    if not sympy.isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not D.is_knot():
        raise NotAKnot("elementary divisors are defined here for knots", witness=(D.n_components,))
    n = len(D.crossings)
    if n <= 1:
        return []
    P = presentation_matrix(D)
    size = n - 1
    deltas: List[sympy.Poly] = []
    for i in range(size + 1):
        k = size - i
        if k == 0:
            deltas.append(sympy.Poly(1, T, modulus=p))
            continue
        minors = (
            to_gf_poly(_minor(P, rows, cols), p)
            for rows in itertools.combinations(range(size), k)
            for cols in itertools.combinations(range(size), k)
        )
        deltas.append(_gcd_all(minors, p))
    factors = []
    for i in range(size):
        hi, lo = deltas[i], deltas[i + 1]
        factors.append(hi if hi.is_zero or lo.is_zero else hi.quo(lo))
    logger.debug("invariant factors of %s over F_%d: %s", D.name, p, [str(f.as_expr()) for f in factors])
    return factors


def _order(f: sympy.Poly, p: int) -> int:
    return p ** f.degree()


def inoue_count(D: LinkDiagram, p: int, J: Union[LaurentPoly, str, int, None]) -> int:
    """|Lambda_p/J| * prod |Lambda_p/(e_i, J)|, the number of colorings by Lambda_p/J."""
    if not D.is_knot():
        raise NotAKnot("the coloring count formula needs a knot", witness=(D.n_components,))
    if J is None:
        J = 0
    if isinstance(J, int):
        J = LaurentPoly.const(J)
    j_poly = to_gf_poly(LaurentPoly.parse(J), p)
    if j_poly.is_zero:
        raise InfiniteModule(f"Lambda_{p}/(0) is infinite", witness=(p,))
    count = _order(j_poly, p)
    for e in invariant_factors(D, p):
        g = j_poly if e.is_zero else e.gcd(j_poly)
        count *= _order(g, p)
    logger.info("predicted colorings of %s by Lambda_%d/(%s): %d", D.name, p, j_poly.as_expr(), count)
    return count


def module_size(p: int, J: Union[LaurentPoly, str]) -> Optional[int]:
    j_poly = to_gf_poly(LaurentPoly.parse(J), p)
    return None if j_poly.is_zero else _order(j_poly, p)
