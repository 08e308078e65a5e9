import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from qf.algebra.ring import FiniteRing, family_ring, ideal_kind, section, strip_ideal_factor
from qf.core.config import resolve_cap
from qf.core.errors import NotACocycle, check_cap
from qf.homology.cocycles import Cochain, is_2cocycle
from qf.quandles.families import alexander_quandle
from qf.quandles.isomorphism import find_isomorphism
from qf.quandles.quandle import FiniteQuandle, QuandleHom, check_axioms, validate_quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AbelianExtension:
    """E(X, Z_q, phi) on pairs (a, x); element (a, x) sits at index x*q + a."""

    base: FiniteQuandle
    q: int
    cocycle: Cochain
    total: FiniteQuandle
    projection: QuandleHom
    section: Tuple[int, ...]

    def pair(self, index: int) -> Tuple[int, int]:
        x, a = divmod(index, self.q)
        return a, x

    def index(self, a: int, x: int) -> int:
        return x * self.q + (a % self.q)


def _pair_labels(fiber_labels, base_labels):
    return [f"({a},{x})" for x in base_labels for a in fiber_labels]


def abelian_extension(X: FiniteQuandle, q: int, phi: Cochain) -> AbelianExtension:
    if q < 1:
        raise ValueError("q must be >= 1")
    res = is_2cocycle(phi, X, q)
    if not res:
        raise NotACocycle(f"phi is not a 2-cocycle over Z_{q}: {res.reason}", witness=res.witness)
    n = len(X)
    a = np.arange(q)
    # rows (x1, a1), columns (x2, a2)
    fiber = (a[None, :, None, None] + phi.values[:, None, :, None]) % q
    base = np.broadcast_to(X.table[:, None, :, None], (n, q, n, q))
    table = (base * q + fiber).reshape(n * q, n * q)
    E = validate_quandle(table, _pair_labels([str(k) for k in range(q)], X.labels), f"E({X.name}, Z_{q})")
    proj = QuandleHom(E, X, tuple(i // q for i in range(n * q)))
    sec = tuple(x * q for x in range(n))
    logger.info("abelian extension of %s by Z_%d: %d elements", X.name, q, len(E))
    return AbelianExtension(X, q, phi, E, proj, sec)


def ring_of(X: FiniteQuandle) -> FiniteRing:
    if not X.carrier or not hasattr(X.carrier[0], "ring"):
        raise ValueError(f"{X.name} is not an Alexander quandle on a finite ring")
    return X.carrier[0].ring


@lru_cache(maxsize=64)
def cocycle_from_section(family: str, q: int, m: int) -> Cochain:
    """phi(x, y) = [s(x)*s(y) - s(x*y)] stripped of (1-T)^m (W) or q^m (U).

    The cochain lives on the Alexander quandle of W_m (resp. U_m) and takes
    values in Z_q.
    """
    R = family_ring(family, q, m)
    E = family_ring(family, q, m + 1)
    X = alexander_quandle(R)
    kind = ideal_kind(R)
    elems = X.carrier
    lifts = [section(x, E) for x in elems]
    t, one_minus_t = E.T, E.one - E.T
    ta = [t * s for s in lifts]
    sb = [one_minus_t * s for s in lifts]
    vals = np.zeros((len(X), len(X)), dtype=np.int64)
    for i, j in itertools.product(range(len(X)), repeat=2):
        diff = ta[i] + sb[j] - lifts[int(X.table[i, j])]
        vals[i, j] = strip_ideal_factor(diff, kind)
    phi = Cochain.from_array(X, 2, q, vals)
    logger.debug("section cocycle %s q=%d m=%d computed", family, q, m)
    return phi


def _addition_table(r: FiniteRing) -> np.ndarray:
    elems = r.elements()
    n, d, q = len(elems), r.degree, r.q
    coeffs = np.array([e.coeffs for e in elems], dtype=np.int64).reshape(n, d)
    radix = np.array([q ** (d - 1 - k) for k in range(d)], dtype=np.int64)
    return ((coeffs[:, None, :] + coeffs[None, :, :]) % q) @ radix


def _ae_table(X: FiniteQuandle, A: FiniteQuandle, add: np.ndarray, phi: np.ndarray) -> np.ndarray:
    n, k = len(X), len(A)
    fiber = add[A.table[:, None, :, None], phi[None, :, None, :]]
    # fiber[a1, x1, a2, x2] -> reorder to rows (x1, a1), cols (x2, a2)
    fiber = fiber.transpose(1, 0, 3, 2)
    base = np.broadcast_to(X.table[:, None, :, None], (n, k, n, k))
    return (base * k + fiber).reshape(n * k, n * k)


def alexander_extension(X: FiniteQuandle, A_ring: FiniteRing, phi: Cochain) -> FiniteQuandle:
    """AE(X, A, phi): (a1,x1)*(a2,x2) = (a1*a2 + phi(x1,x2), x1*x2).

    phi takes values in A, encoded as element indices of A_ring.elements().
    """
    A = alexander_quandle(A_ring)
    if phi.q != len(A) or len(phi.quandle) != len(X):
        raise ValueError("phi must map X x X into the elements of A")
    table = _ae_table(X, A, _addition_table(A_ring), phi.values)
    return validate_quandle(table, _pair_labels(A.labels, X.labels), f"AE({X.name}, {A.name})")


@dataclass(frozen=True, eq=False)
class AlexanderExtensionSearch:
    cocycle: Cochain
    total: FiniteQuandle
    isomorphism: QuandleHom
    tried: int


def search_alexander_extension(
    X: FiniteQuandle, A_ring: FiniteRing, target: FiniteQuandle, *, max_enum: Optional[int] = None
) -> Optional[AlexanderExtensionSearch]:
    """First phi with phi(x,x) = 0, in lexicographic order, whose AE is a quandle isomorphic to target."""
    A = alexander_quandle(A_ring)
    n, k = len(X), len(A)
    if n * k != len(target):
        return None
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    check_cap(k ** len(off), resolve_cap(max_enum), "Alexander extension search")
    add = _addition_table(A_ring)
    labels = _pair_labels(A.labels, X.labels)
    tried = 0
    for values in itertools.product(range(k), repeat=len(off)):
        tried += 1
        phi = np.zeros((n, n), dtype=np.int64)
        for (i, j), v in zip(off, values):
            phi[i, j] = v
        table = _ae_table(X, A, add, phi)
        if not check_axioms(table):
            continue
        total = validate_quandle(table, labels, f"AE({X.name}, {A.name})")
        iso = find_isomorphism(total, target)
        if iso is not None:
            logger.info("Alexander extension found after %d candidates", tried)
            return AlexanderExtensionSearch(Cochain.from_array(X, 2, k, phi), total, iso, tried)
    return None
