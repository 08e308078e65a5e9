"""Conway-normalized Alexander polynomial and the minimal degree of nabla.

With s = T^(1/2), Delta(T) = T^(-(mu+nu)/2) f(T) becomes a Laurent
polynomial F(s) = f(s^2) s^-(mu+nu) with integer exponents, and nabla(z) is
read off by peeling z^d = (s^-1 - s)^d from the top degree down.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from qf.algebra.laurent import LaurentPoly
from qf.algebra.matrix import laurent_det
from qf.alexander.matrix import alexander_matrix, deleted_minor
from qf.invariants.state_sum import smallest_nontrivial_level
from qf.links.diagram import LinkDiagram

logger = logging.getLogger(__name__)

_Z = LaurentPoly.from_dict({-1: 1, 1: -1})


@dataclass(frozen=True)
class ConwayData:
    deleted: int
    f: LaurentPoly
    mu: Optional[int]
    nu: Optional[int]
    half_integer: bool
    nabla: Tuple[Tuple[int, int], ...]
    min_degree: Union[int, float]
    bound_level: Optional[int] = None
    bound_holds: Optional[bool] = None

    @property
    def delta(self) -> LaurentPoly:
        """Delta in the variable s = T^(1/2)."""
        return _symmetrize(self.f)

    def format_nabla(self) -> str:
        if not self.nabla:
            return "0"
        parts = []
        for k, c in self.nabla:
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            body = f"{abs(c)}{mono}" if (abs(c) != 1 or not mono) else mono
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _symmetrize(f: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return f
    shift = f.max_degree + f.min_degree
    return LaurentPoly.from_dict({2 * e - shift: c for e, c in f.terms})


def conway_coefficients(F: LaurentPoly) -> Dict[int, int]:
    """Coefficients c_k with F(s) = sum c_k (s^-1 - s)^k."""
    coeffs: Dict[int, int] = {}
    rest = F
    while not rest.is_zero():
        d = rest.max_degree
        if d < 0:
            raise ValueError(f"{F} is not a polynomial in s^-1 - s")
        lead = rest.coeff(d)
        c = lead * (-1) ** d
        coeffs[d] = c
        rest = rest - (_Z ** d) * c
    return coeffs


def conway_min_degree(
    D: LinkDiagram,
    j: int = 0,
    *,
    check_bound: bool = False,
    family: str = "W",
    q: int = 2,
    max_level: int = 4,
    max_enum: Optional[int] = None,
) -> ConwayData:
    n = len(D.crossings)
    if n == 0:
        if D.n_components != 1:
            return ConwayData(j, LaurentPoly(), None, None, False, (), math.inf)
        one = LaurentPoly.const(1)
        data = ConwayData(j, one, 0, 0, False, ((0, 1),), 0)
    else:
        A = alexander_matrix(D)
        if A.shape[0] != A.shape[1]:
            # a crossingless component splits the diagram
            data = ConwayData(j, LaurentPoly(), None, None, False, (), math.inf)
        else:
            f = laurent_det(deleted_minor(A, j))
            if f.is_zero():
                data = ConwayData(j, f, None, None, False, (), math.inf)
            else:
                mu, nu = f.max_degree, f.min_degree
                coeffs = conway_coefficients(_symmetrize(f))
                nabla = tuple(sorted(coeffs.items()))
                data = ConwayData(j, f, mu, nu, (mu + nu) % 2 == 1, nabla, min(coeffs))
    if check_bound:
        level = smallest_nontrivial_level(D, family, q, max_level, max_enum=max_enum)
        holds = None if level is None else data.min_degree >= level
        data = ConwayData(data.deleted, data.f, data.mu, data.nu, data.half_integer, data.nabla,
                          data.min_degree, level, holds)
    logger.info("%s: min-deg nabla = %s (f = %s)", D.name, data.min_degree, data.f)
    return data
