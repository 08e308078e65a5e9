"""Colorings of twist-spun knots, modelled by their monodromy on tangle colorings.

Each full twist moves every arc color b of the tangle to b*a, where a is
the color of the axis arc. A coloring survives k twists when (*a)^k fixes it.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from qf.core.errors import SizeLimitExceeded
from qf.invariants.colorings import Coloring, enumerate_colorings
from qf.links.diagram import Tangle
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistSpinProblem:
    tangle: Tangle
    quandle: FiniteQuandle
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")


@dataclass(frozen=True)
class TwistSpinResult:
    fixed: Tuple[Coloring, ...]
    count: int
    nontrivial: bool
    witness: Optional[Coloring] = None


def twist_action(C: Coloring, a: int) -> Coloring:
    t = C.quandle.table
    return Coloring(C.diagram, C.quandle, tuple(int(t[b, a]) for b in C.colors))


def twist_orbit_length(C: Coloring, a: int, *, max_steps: int = 1 << 16) -> int:
    current = twist_action(C, a)
    k = 1
    while current.colors != C.colors:
        current = twist_action(current, a)
        k += 1
        if k > max_steps:
            raise SizeLimitExceeded(f"twist orbit longer than {max_steps}")
    return k


def twist_spin_colorings(
    P: TwistSpinProblem, *, max_enum: Optional[int] = None, threads: Optional[int] = None
) -> TwistSpinResult:
    D = P.tangle.diagram
    axis = P.tangle.axis_index
    fixed = []
    for C in enumerate_colorings(D, P.quandle, max_enum=max_enum, threads=threads):
        a = C.colors[axis]
        if P.k % twist_orbit_length(C, a) == 0:
            fixed.append(C)
    witness = next((C for C in fixed if not C.is_constant()), None)
    result = TwistSpinResult(tuple(fixed), len(fixed), witness is not None, witness)
    logger.info("%d-twist spun %s over %s: %d fixed colorings, non-trivial=%s",
                P.k, D.name, P.quandle.name, result.count, result.nontrivial)
    return result
