import logging
import re
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np
from sympy.combinatorics import Permutation

from qf.algebra.ring import FiniteRing
from qf.core.errors import NotClosed, ParseError
from qf.quandles.quandle import FiniteQuandle, validate_quandle

logger = logging.getLogger(__name__)

QS4_CYCLES = ("(123)", "(142)", "(134)", "(243)")


def dihedral(n: int) -> FiniteQuandle:
    if n < 1:
        raise ValueError("n must be >= 1")
    i = np.arange(n)
    table = (2 * i[None, :] - i[:, None]) % n
    return validate_quandle(table, [str(k) for k in range(n)], f"R_{n}")


def trivial_quandle(n: int) -> FiniteQuandle:
    if n < 1:
        raise ValueError("n must be >= 1")
    table = np.repeat(np.arange(n)[:, None], n, axis=1)
    return validate_quandle(table, [str(k) for k in range(n)], f"T_{n}")


def alexander_quandle(r: FiniteRing, name: Optional[str] = None) -> FiniteQuandle:
    """a*b = Ta + (1-T)b on the elements of r, labeled by their canonical strings."""
    elems = r.elements()
    n, d, q = len(elems), r.degree, r.q
    one_minus_t = r.one - r.T
    ta = np.array([(r.T * e).coeffs for e in elems], dtype=np.int64).reshape(n, d)
    sb = np.array([(one_minus_t * e).coeffs for e in elems], dtype=np.int64).reshape(n, d)
    radix = np.array([q ** (d - 1 - k) for k in range(d)], dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    rows = max(1, (1 << 22) // max(1, n * max(d, 1)))
    for start in range(0, n, rows):
        block = (ta[start:start + rows, None, :] + sb[None, :, :]) % q
        table[start:start + rows] = block @ radix if d else 0
    Q = validate_quandle(table, [str(e) for e in elems], name or r.describe(), tuple(elems))
    logger.info("Alexander quandle on %s: %d elements", r.describe(), n)
    return Q


def _cycle_points(body: str) -> List[str]:
    parts = body.replace(",", " ").split() if (" " in body or "," in body) else list(body)
    return [p for p in parts if p]


def _max_point(text: str) -> int:
    pts = [int(p) for body in re.findall(r"\(([^()]*)\)", text) for p in _cycle_points(body) if p.isdigit()]
    return max(pts, default=1)


def parse_cycles(text: str, degree: int) -> Permutation:
    """'(123)(45)' or '(1 2 3)' with 1-based points; '()' is the identity."""
    cycles = re.findall(r"\(([^()]*)\)", text.strip())
    if not cycles and text.strip():
        raise ParseError(f"cannot read {text!r} as cycle notation")
    perm = Permutation(list(range(degree)))
    for body in cycles:
        parts = _cycle_points(body)
        if not parts:
            continue
        try:
            pts = [int(p) - 1 for p in parts]
        except ValueError:
            raise ParseError(f"cycle {body!r} must list integers")
        if min(pts) < 0 or max(pts) >= degree:
            raise ParseError(f"cycle {body!r} leaves 1..{degree}")
        perm = perm * Permutation([pts], size=degree)
    return perm


def cycle_label(p: Permutation) -> str:
    sep = "" if p.size <= 9 else " "
    cycles = [c for c in p.cyclic_form]
    if not cycles:
        return "()"
    return "".join("(" + sep.join(str(x + 1) for x in c) + ")" for c in cycles)


def conjugate(a: Permutation, b: Permutation, fold: int = 1) -> Permutation:
    """b^-fold a b^fold, with permutations composed as functions (rightmost first)."""
    bf = b ** fold
    # sympy's x*y applies x first
    return bf * a * ~bf


def conjugation_quandle(
    perms: Iterable[Union[str, Permutation]],
    fold: int = 1,
    degree: Optional[int] = None,
    name: Optional[str] = None,
) -> FiniteQuandle:
    items = list(perms)
    if degree is None:
        degree = max([p.size if isinstance(p, Permutation) else _max_point(p) for p in items] + [1])
    elems: List[Permutation] = []
    for p in items:
        perm = p if isinstance(p, Permutation) else parse_cycles(p, degree)
        if perm.size != degree:
            perm = Permutation(perm.array_form + list(range(perm.size, degree)))
        if perm not in elems:
            elems.append(perm)
    pos = {tuple(p.array_form): i for i, p in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    labels = [cycle_label(p) for p in elems]
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            c = tuple(conjugate(a, b, fold).array_form)
            if c not in pos:
                raise NotClosed(
                    f"{labels[i]} conjugated by {labels[j]} gives {cycle_label(Permutation(list(c)))}, outside the set",
                    witness=(labels[i], labels[j]),
                )
            table[i, j] = pos[c]
    return validate_quandle(table, labels, name or "Conj", tuple(elems))


def qs4() -> FiniteQuandle:
    return conjugation_quandle(QS4_CYCLES, degree=4, name="QS_4")


def transpositions(n: int) -> FiniteQuandle:
    labels: Sequence[str] = [f"({i}{j})" if n <= 9 else f"({i} {j})"
                             for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return conjugation_quandle(labels, degree=n, name=f"Tr_{n}")
