"""Backtracking search for quandle homomorphisms and isomorphisms.

Each choice f(x) = y is closed under both operations: once f(a) and f(b)
are known, f(a*b) and f(a \\bar* b) are forced. Isomorphism search also
prunes candidates by an element profile that any isomorphism preserves.
"""
import logging
from collections import Counter
from typing import List, Optional, Tuple

from qf.core.config import resolve_cap, settings
from qf.core.errors import SizeLimitExceeded
from qf.quandles.quandle import FiniteQuandle, QuandleHom

logger = logging.getLogger(__name__)


def _cycle_type(perm: List[int]) -> Tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def element_profiles(Q: FiniteQuandle) -> List[tuple]:
    """Per element: cycle type of x -> x*a, and how many b fix a under *b."""
    n = len(Q)
    out = []
    for a in range(n):
        col = Q.table[:, a].tolist()
        fixers = sum(1 for b in range(n) if Q.table[a, b] == a)
        out.append((_cycle_type(col), fixers))
    return out


class _Search:
    def __init__(self, X: FiniteQuandle, Y: FiniteQuandle, injective: bool, max_nodes: int):
        self.X, self.Y = X, Y
        self.tx, self.ix = X.table.tolist(), X.inv_table.tolist()
        self.ty, self.iy = Y.table.tolist(), Y.inv_table.tolist()
        self.injective = injective
        self.f = [-1] * len(X)
        self.used = [False] * len(Y)
        self.assigned: List[int] = []
        self.max_nodes = max_nodes
        self.nodes = 0
        self.candidates = [list(range(len(Y))) for _ in range(len(X))]
        if injective:
            px, py = element_profiles(X), element_profiles(Y)
            self.candidates = [[y for y in range(len(Y)) if py[y] == px[x]] for x in range(len(X))]

    def _assign(self, x: int, y: int, trail: List[int]) -> bool:
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            cur = self.f[a]
            if cur >= 0:
                if cur != b:
                    return False
                continue
            if self.injective and (self.used[b] or b not in self.candidates[a]):
                return False
            self.f[a] = b
            self.used[b] = True
            trail.append(a)
            self.assigned.append(a)
            for c in self.assigned:
                fc = self.f[c]
                queue.append((self.tx[a][c], self.ty[b][fc]))
                queue.append((self.tx[c][a], self.ty[fc][b]))
                queue.append((self.ix[a][c], self.iy[b][fc]))
                queue.append((self.ix[c][a], self.iy[fc][b]))
        return True

    def _undo(self, trail: List[int]) -> None:
        for a in reversed(trail):
            self.assigned.pop()
            self.used[self.f[a]] = False
            self.f[a] = -1

    def run(self, limit: Optional[int]):
        results: List[Tuple[int, ...]] = []

        def rec() -> bool:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise SizeLimitExceeded(f"homomorphism search exceeded {self.max_nodes} nodes")
            try:
                x = self.f.index(-1)
            except ValueError:
                results.append(tuple(self.f))
                return limit is not None and len(results) >= limit
            for y in self.candidates[x]:
                trail: List[int] = []
                ok = self._assign(x, y, trail)
                if ok and rec():
                    self._undo(trail)
                    return True
                self._undo(trail)
            return False

        rec()
        logger.debug("homomorphism search %s -> %s: %d nodes, %d found",
                     self.X.name, self.Y.name, self.nodes, len(results))
        return results


def _check_size(X: FiniteQuandle, Y: FiniteQuandle, max_size: Optional[int]) -> None:
    cap = settings.max_iso_size if max_size is None else max_size
    big = max(len(X), len(Y))
    if big > cap:
        raise SizeLimitExceeded(f"isomorphism search admits quandles up to {cap} elements, got {big}", witness=(big,))


def find_isomorphism(
    X: FiniteQuandle, Y: FiniteQuandle, *, max_size: Optional[int] = None, max_nodes: Optional[int] = None
) -> Optional[QuandleHom]:
    _check_size(X, Y, max_size)
    if len(X) != len(Y):
        return None
    if sorted(element_profiles(X)) != sorted(element_profiles(Y)):
        return None
    found = _Search(X, Y, True, resolve_cap(max_nodes)).run(limit=1)
    return QuandleHom(X, Y, found[0]) if found else None


def are_isomorphic(X: FiniteQuandle, Y: FiniteQuandle, **kw) -> bool:
    return find_isomorphism(X, Y, **kw) is not None


def find_homomorphisms(
    X: FiniteQuandle,
    Y: FiniteQuandle,
    *,
    limit: Optional[int] = None,
    max_size: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> List[QuandleHom]:
    _check_size(X, Y, max_size)
    maps = _Search(X, Y, False, resolve_cap(max_nodes)).run(limit)
    return [QuandleHom(X, Y, m) for m in sorted(maps)]


def profile_summary(Q: FiniteQuandle) -> Counter:
    return Counter(element_profiles(Q))
