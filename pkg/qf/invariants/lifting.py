import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from qf.core.config import resolve_cap
from qf.core.errors import check_cap
from qf.extensions.abelian import AbelianExtension
from qf.invariants.colorings import Coloring, is_coloring
from qf.links.diagram import Crossing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftResult:
    """Outcome of lifting a coloring along E(X, A, phi) -> X.

    obstruction[i] is the holonomy of the fiber coordinate around
    component i; the lift exists exactly when all of them vanish.
    """

    obstruction: Tuple[int, ...]
    lift: Optional[Coloring] = None

    @property
    def extends(self) -> bool:
        return self.lift is not None


def extends_coloring(C: Coloring, ext: AbelianExtension) -> LiftResult:
    """Walk each component from its base arc carrying a fiber value.

    At a positive crossing (a, x) * (b, y) = (a + phi(x, y), x*y); at a
    negative crossing the out-going arc z satisfies z * y = in, so the fiber
    value drops by phi(z, y).
    """
    if len(C.quandle) != len(ext.base):
        raise ValueError("C must color the diagram by the base of the extension")
    D, q, phi = C.diagram, ext.q, ext.cocycle
    by_in: Dict[str, Crossing] = {c.under_in: c for c in D.crossings}
    fiber: Dict[str, int] = {}
    holonomy: List[int] = []
    for comp in D.components:
        a = 0
        fiber[comp.base] = 0
        if len(comp.arcs) == 1 and comp.base not in by_in:
            holonomy.append(0)
            continue
        arc = comp.base
        while True:
            c = by_in[arc]
            y = C.color(c.over)
            if c.sign > 0:
                a = (a + int(phi.values[C.color(c.under_in), y])) % q
            else:
                a = (a - int(phi.values[C.color(c.under_out), y])) % q
            arc = c.under_out
            if arc == comp.base:
                break
            fiber[arc] = a
        holonomy.append(a % q)
    obstruction = tuple(holonomy)
    if any(obstruction):
        return LiftResult(obstruction)
    colors = tuple(ext.index(fiber[arc], C.colors[i]) for i, arc in enumerate(D.arcs))
    lift = Coloring(D, ext.total, colors)
    if not lift.is_valid():
        raise AssertionError("constructed lift violates a crossing relation")
    return LiftResult(obstruction, lift)


def find_lifts(C: Coloring, ext: AbelianExtension, *, max_enum: Optional[int] = None) -> List[Coloring]:
    """All lifts of C, by trying every choice of fiber coordinates."""
    D = C.diagram
    n_arcs = len(D.arcs)
    check_cap(ext.q ** n_arcs, resolve_cap(max_enum), "lift search")
    found = []
    for fibers in itertools.product(range(ext.q), repeat=n_arcs):
        colors = tuple(ext.index(a, x) for a, x in zip(fibers, C.colors))
        if is_coloring(D, ext.total, colors):
            found.append(Coloring(D, ext.total, colors))
    logger.debug("%d lifts of a coloring of %s", len(found), D.name)
    return found
