"""Quandle colorings of link diagrams.

A coloring is stored as a tuple of element indices, one per arc in the
diagram's base-point order. At every crossing gamma = alpha * over, where alpha
is the under-arc the over-arc's normal points away from: the incoming one at
a positive crossing and the outgoing one at a negative crossing.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from qf.core.config import resolve_cap, settings
from qf.core.errors import SizeLimitExceeded
from qf.links.diagram import LinkDiagram
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    diagram: LinkDiagram
    quandle: FiniteQuandle
    colors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != len(self.diagram.arcs):
            raise ValueError("one color per arc is required")

    def color(self, arc: str) -> int:
        return self.colors[self.diagram.arc_index[arc]]

    def label(self, arc: str) -> str:
        return self.quandle.labels[self.color(arc)]

    def as_labels(self) -> Dict[str, str]:
        return {a: self.quandle.labels[c] for a, c in zip(self.diagram.arcs, self.colors)}

    def is_constant(self) -> bool:
        return len(set(self.colors)) <= 1

    def is_valid(self) -> bool:
        return is_coloring(self.diagram, self.quandle, self.colors)

    def sort_key(self) -> Tuple[int, ...]:
        return self.colors


def is_coloring(D: LinkDiagram, X: FiniteQuandle, colors: Sequence[int]) -> bool:
    idx = D.arc_index
    t = X.table
    return all(
        colors[idx[c.gamma]] == t[colors[idx[c.alpha]], colors[idx[c.over]]] for c in D.crossings
    )


def coloring_from_labels(D: LinkDiagram, X: FiniteQuandle, labels: Mapping[str, str]) -> Coloring:
    colors = tuple(X.index(labels[a]) for a in D.arcs)
    if not is_coloring(D, X, colors):
        raise ValueError("the assignment violates a crossing relation")
    return Coloring(D, X, colors)


class _Backtrack:
    """Depth-first search over arc colors with crossing propagation.

    Two known colors at a crossing fix the third when the unknown one is an
    under-arc (gamma = alpha * over, alpha = gamma / over).
    """

    def __init__(self, D: LinkDiagram, X: FiniteQuandle, max_nodes: int):
        self.n_arcs = len(D.arcs)
        idx = D.arc_index
        self.rels = [(idx[c.alpha], idx[c.over], idx[c.gamma]) for c in D.crossings]
        self.touching: List[List[int]] = [[] for _ in range(self.n_arcs)]
        for r, (i, o, u) in enumerate(self.rels):
            for a in {i, o, u}:
                self.touching[a].append(r)
        self.t = X.table.tolist()
        self.inv = X.inv_table.tolist()
        self.size = len(X)
        self.max_nodes = max_nodes
        self.nodes = 0

    def _propagate(self, colors: List[int], arc: int, value: int, trail: List[int]) -> bool:
        queue = [(arc, value)]
        while queue:
            a, v = queue.pop()
            if colors[a] >= 0:
                if colors[a] != v:
                    return False
                continue
            colors[a] = v
            trail.append(a)
            for r in self.touching[a]:
                i, o, u = self.rels[r]
                ci, co, cu = colors[i], colors[o], colors[u]
                if ci >= 0 and co >= 0:
                    queue.append((u, self.t[ci][co]))
                elif cu >= 0 and co >= 0:
                    queue.append((i, self.inv[cu][co]))
        return True

    def run(self, seed: Optional[int] = None) -> List[Tuple[int, ...]]:
        colors = [-1] * self.n_arcs
        found: List[Tuple[int, ...]] = []

        def rec() -> None:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise SizeLimitExceeded(f"coloring search exceeded {self.max_nodes} nodes", witness=(self.nodes,))
            try:
                arc = colors.index(-1)
            except ValueError:
                found.append(tuple(colors))
                return
            for v in range(self.size):
                trail: List[int] = []
                if self._propagate(colors, arc, v, trail):
                    rec()
                for a in trail:
                    colors[a] = -1

        if seed is None:
            rec()
        else:
            trail: List[int] = []
            if self._propagate(colors, 0, seed, trail):
                rec()
        return found


def enumerate_colorings(
    D: LinkDiagram,
    X: FiniteQuandle,
    *,
    max_enum: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[Coloring]:
    """Every coloring of D by X, sorted by the color tuple.

    The search is split on the color of the first arc; the pieces are merged
    in seed order, so the result does not depend on the thread count.
    """
    cap = resolve_cap(max_enum)
    workers = max(1, threads or settings.threads)

    def task(seed: int) -> Tuple[List[Tuple[int, ...]], int]:
        search = _Backtrack(D, X, cap)
        return search.run(seed), search.nodes

    seeds = range(len(X))
    if workers == 1 or len(X) == 1:
        parts = [task(s) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, seeds))
    nodes = sum(n for _, n in parts)
    if nodes > cap:
        raise SizeLimitExceeded(f"coloring search visited {nodes} nodes, cap is {cap}", witness=(nodes,))
    found = sorted(c for part, _ in parts for c in part)
    logger.info("%s over %s: %d colorings (%d search nodes)", D.name, X.name, len(found), nodes)
    return [Coloring(D, X, c) for c in found]


def brute_force_colorings(D: LinkDiagram, X: FiniteQuandle, *, max_enum: Optional[int] = None) -> List[Coloring]:
    """Check all |X|^arcs assignments; an oracle for small inputs."""
    total = len(X) ** len(D.arcs)
    cap = resolve_cap(max_enum)
    if total > cap:
        raise SizeLimitExceeded(f"brute force needs {total} assignments, cap is {cap}", witness=(total,))
    out = [
        Coloring(D, X, colors)
        for colors in itertools.product(range(len(X)), repeat=len(D.arcs))
        if is_coloring(D, X, colors)
    ]
    return out


def constant_coloring(D: LinkDiagram, X: FiniteQuandle, x: int) -> Coloring:
    return Coloring(D, X, (x,) * len(D.arcs))
