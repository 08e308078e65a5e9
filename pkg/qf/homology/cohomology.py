"""Cohomology of the rack, degenerate and quandle complexes over F_p.

Cochain vectors are indexed by chain_basis(n, |X|, theory). The coboundary
delta^n is the transpose action of the boundary matrix B_{n+1} (rows
C_{n+1}, columns C_n): (delta f)(t) = sum_s B_{n+1}[t, s] f(s).
"""
import logging
from functools import lru_cache
from typing import List, Optional

import galois
import numpy as np
import sympy

from qf.core.config import resolve_cap
from qf.core.errors import SizeLimitExceeded
from qf.homology.chains import THEORIES, Theory, boundary_of_tuple, chain_basis
from qf.homology.cocycles import Cochain
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def _field(p: int):
    if not sympy.isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    return galois.GF(p)


def boundary_matrix(n: int, X: FiniteQuandle, theory: Theory = "quandle",
                    *, max_enum: Optional[int] = None) -> np.ndarray:
    """Integer matrix of d_n: C_n -> C_{n-1}, rows indexed by C_n."""
    if theory not in THEORIES:
        raise ValueError("theory must be 'rack', 'degenerate' or 'quandle'")
    rows = chain_basis(n, len(X), theory)
    cols = chain_basis(n - 1, len(X), theory)
    cells = len(rows) * len(cols)
    cap = resolve_cap(max_enum)
    if cells > cap:
        raise SizeLimitExceeded(f"boundary matrix d_{n} has {cells} cells, cap is {cap}", witness=(n, cells))
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if n <= 1 or not rows or not cols:
        return M
    col_index = {t: j for j, t in enumerate(cols)}
    for i, t in enumerate(rows):
        for face, c in boundary_of_tuple(X, t).items():
            if not c:
                continue
            if face in col_index:
                M[i, col_index[face]] += c
            elif theory == "degenerate":
                raise AssertionError(f"boundary of degenerate {t} leaves the subcomplex at {face}")
    return M


def _rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    GF = _field(p)
    return int(np.linalg.matrix_rank(GF(M % p)))


def cohomology_dimension(n: int, X: FiniteQuandle, p: int, theory: Theory = "quandle",
                         *, max_enum: Optional[int] = None) -> int:
    """dim Z^n - dim B^n over F_p."""
    if n < 0:
        raise ValueError("n must be >= 0")
    dim_c = len(chain_basis(n, len(X), theory))
    r_up = _rank(boundary_matrix(n + 1, X, theory, max_enum=max_enum), p)
    r_down = _rank(boundary_matrix(n, X, theory, max_enum=max_enum), p)
    dim = dim_c - r_up - r_down
    logger.info("dim H^%d_%s(%s; F_%d) = %d (C=%d, rank d_%d=%d, rank d_%d=%d)",
                n, theory[0].upper(), X.name, p, dim, dim_c, n + 1, r_up, n, r_down)
    return dim


def homology_dimension(n: int, X: FiniteQuandle, p: int, theory: Theory = "quandle",
                       *, max_enum: Optional[int] = None) -> int:
    # over a field homology and cohomology have the same dimension
    return cohomology_dimension(n, X, p, theory, max_enum=max_enum)


def _vector_to_cochain(vec, n: int, X: FiniteQuandle, p: int, theory: Theory) -> Cochain:
    arr = np.zeros((len(X),) * n, dtype=np.int64)
    for t, v in zip(chain_basis(n, len(X), theory), np.asarray(vec, dtype=np.int64).tolist()):
        arr[t] = v
    return Cochain.from_array(X, n, p, arr)


def cochain_to_vector(c: Cochain, theory: Theory = "quandle") -> np.ndarray:
    return np.array([int(c.values[t]) for t in chain_basis(c.degree, len(c.quandle), theory)], dtype=np.int64)


def cocycle_basis(n: int, X: FiniteQuandle, p: int, theory: Theory = "quandle",
                  *, max_enum: Optional[int] = None) -> List[Cochain]:
    GF = _field(p)
    dim_c = len(chain_basis(n, len(X), theory))
    if dim_c == 0:
        return []
    B = boundary_matrix(n + 1, X, theory, max_enum=max_enum)
    if B.shape[0] == 0:
        rows = GF(np.eye(dim_c, dtype=np.int64))
    else:
        rows = GF(B % p).null_space()
    return [_vector_to_cochain(r, n, X, p, theory) for r in rows]


def cohomology_generators(n: int, X: FiniteQuandle, p: int, theory: Theory = "quandle",
                          *, max_enum: Optional[int] = None) -> List[Cochain]:
    """Cocycles whose classes form a basis of H^n, chosen greedily from cocycle_basis."""
    GF = _field(p)
    dim_c = len(chain_basis(n, len(X), theory))
    if dim_c == 0:
        return []
    Bn = boundary_matrix(n, X, theory, max_enum=max_enum)
    span = GF((Bn % p).T) if Bn.size else GF(np.zeros((0, dim_c), dtype=np.int64))
    rank = int(np.linalg.matrix_rank(span)) if span.shape[0] else 0
    gens: List[Cochain] = []
    for z in cocycle_basis(n, X, p, theory, max_enum=max_enum):
        v = GF(cochain_to_vector(z, theory) % p)
        trial = GF(np.vstack([np.asarray(span), np.asarray(v)[None, :]]))
        r = int(np.linalg.matrix_rank(trial))
        if r > rank:
            gens.append(z)
            span, rank = trial, r
    logger.info("H^%d generators over F_%d for %s: %d", n, p, X.name, len(gens))
    return gens


def is_coboundary(theta: Cochain, X: Optional[FiniteQuandle] = None, p: Optional[int] = None,
                  theory: Theory = "quandle", *, max_enum: Optional[int] = None) -> bool:
    """Whether theta lies in the image of delta over F_p."""
    X = X or theta.quandle
    p = p or theta.q
    vec = cochain_to_vector(theta, theory) % p
    if not vec.any():
        return True
    Bn = boundary_matrix(theta.degree, X, theory, max_enum=max_enum)
    if Bn.size == 0:
        return False
    base = _rank(Bn.T, p)
    return _rank(np.vstack([Bn.T, vec[None, :]]), p) == base
