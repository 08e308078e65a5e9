import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from qf.core.errors import NotAKnot, SignError, TopologyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    id: str
    sign: int
    over: str
    under_in: str
    under_out: str

    @property
    def alpha(self) -> str:
        """Under-arc the over-arc's normal points away from."""
        return self.under_in if self.sign > 0 else self.under_out

    @property
    def gamma(self) -> str:
        return self.under_out if self.sign > 0 else self.under_in


@dataclass(frozen=True)
class Component:
    name: str
    base: str
    arcs: Tuple[str, ...]


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented link diagram in base-point order.

    arcs run component by component, each in traversal order from its base
    arc; crossings are ordered so that crossing i has the i-th arc (among arcs
    that start at a crossing) as outgoing under-arc.
    """

    arcs: Tuple[str, ...]
    crossings: Tuple[Crossing, ...]
    components: Tuple[Component, ...]
    name: Optional[str] = None

    @cached_property
    def arc_index(self) -> Dict[str, int]:
        return {a: i for i, a in enumerate(self.arcs)}

    @cached_property
    def crossing_index(self) -> Dict[str, int]:
        return {c.id: i for i, c in enumerate(self.crossings)}

    @cached_property
    def _component_of(self) -> Dict[str, int]:
        return {a: k for k, comp in enumerate(self.components) for a in comp.arcs}

    def component_of(self, arc: str) -> int:
        return self._component_of[arc]

    def crossing(self, cid: str) -> Crossing:
        return self.crossings[self.crossing_index[cid]]

    @property
    def n_components(self) -> int:
        return len(self.components)

    def is_knot(self) -> bool:
        return len(self.components) == 1

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def crossing_sets(self) -> Tuple[Tuple[Crossing, ...], ...]:
        return component_crossing_sets(self)


def component_crossing_sets(D: LinkDiagram) -> Tuple[Tuple[Crossing, ...], ...]:
    """T_1..T_r: crossings grouped by the component carrying their under-arcs."""
    groups: List[List[Crossing]] = [[] for _ in D.components]
    for c in D.crossings:
        groups[D.component_of(c.under_out)].append(c)
    return tuple(tuple(g) for g in groups)


@dataclass(frozen=True)
class Tangle:
    """A knot cut open along its axis arc; both open ends carry the axis color."""

    diagram: LinkDiagram
    axis_arc: str

    def __post_init__(self):
        if not self.diagram.is_knot():
            raise NotAKnot("a 1-tangle closes to a knot, got a link", witness=(self.diagram.n_components,))
        if self.axis_arc not in self.diagram.arc_index:
            raise TopologyError(f"axis arc {self.axis_arc} is not an arc of the diagram")

    @property
    def axis_index(self) -> int:
        return self.diagram.arc_index[self.axis_arc]


def normalize_sign(value) -> int:
    if isinstance(value, int) and value in (1, -1):
        return value
    text = str(value).strip()
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise SignError(f"crossing sign must be + or -, got {value!r}", witness=(value,))


def build_diagram(
    crossings: Iterable[Crossing],
    components: Sequence[Tuple[str, str, Sequence[str]]],
    name: Optional[str] = None,
) -> LinkDiagram:
    """Validate and put a diagram into base-point order.

    components are (name, base arc, arcs); the arcs list only fixes membership,
    the traversal order is recomputed from the crossings.
    """
    crossings = [
        Crossing(c.id, normalize_sign(c.sign), c.over, c.under_in, c.under_out) for c in crossings
    ]
    if len({c.id for c in crossings}) != len(crossings):
        raise TopologyError("crossing ids must be unique")

    owner: Dict[str, str] = {}
    for comp_name, base, arcs in components:
        if not arcs:
            raise TopologyError(f"component {comp_name} has no arcs")
        if base not in arcs:
            raise TopologyError(f"base arc {base} is not on component {comp_name}")
        for a in arcs:
            if a in owner:
                raise TopologyError(f"arc {a} belongs to two components", witness=(a,))
            owner[a] = comp_name

    outs = Counter(c.under_out for c in crossings)
    ins = Counter(c.under_in for c in crossings)
    for c in crossings:
        for a in (c.over, c.under_in, c.under_out):
            if a not in owner:
                raise TopologyError(f"crossing {c.id} uses unknown arc {a}", witness=(c.id, a))
        if owner[c.under_in] != owner[c.under_out]:
            raise TopologyError(f"crossing {c.id} joins under-arcs of different components", witness=(c.id,))

    by_in: Dict[str, Crossing] = {}
    for c in crossings:
        by_in[c.under_in] = c

    ordered_components: List[Component] = []
    for comp_name, base, arcs in components:
        arcs_set = set(arcs)
        loop = [a for a in arcs if outs[a] == 0 and ins[a] == 0]
        if loop:
            if len(arcs) != 1:
                raise TopologyError(f"arc {loop[0]} is never an under-arc", witness=(loop[0],))
            ordered_components.append(Component(comp_name, base, (base,)))
            continue
        for a in arcs:
            if outs[a] != 1:
                raise TopologyError(f"arc {a} is the outgoing under-arc of {outs[a]} crossings", witness=(a,))
            if ins[a] != 1:
                raise TopologyError(f"arc {a} is the incoming under-arc of {ins[a]} crossings", witness=(a,))
        order = [base]
        while True:
            nxt = by_in[order[-1]].under_out
            if nxt == base:
                break
            if nxt in order:
                raise TopologyError(f"traversal of {comp_name} cycles without returning to {base}", witness=(nxt,))
            order.append(nxt)
        if set(order) != arcs_set:
            missing = sorted(arcs_set - set(order))
            raise TopologyError(f"component {comp_name} is not a single closed strand", witness=missing)
        if len(order) > 1 and any(by_in[a].under_out == a for a in order):
            raise TopologyError(f"component {comp_name} reuses an arc across one crossing")
        ordered_components.append(Component(comp_name, base, tuple(order)))

    arcs_order = tuple(a for comp in ordered_components for a in comp.arcs)
    position = {a: i for i, a in enumerate(arcs_order)}
    crossings_order = tuple(sorted(crossings, key=lambda c: position[c.under_out]))
    D = LinkDiagram(arcs_order, crossings_order, tuple(ordered_components), name)
    logger.debug("diagram %s: %d arcs, %d crossings, %d components",
                 name, len(arcs_order), len(crossings_order), len(ordered_components))
    return D


def with_base_points(D: LinkDiagram, bases: Sequence[str]) -> LinkDiagram:
    if len(bases) != D.n_components:
        raise ValueError("one base arc per component is required")
    comps = [(c.name, b, c.arcs) for c, b in zip(D.components, bases)]
    return build_diagram(D.crossings, comps, D.name)


def alpha_arc(c: Crossing) -> str:
    return c.alpha


def gamma_arc(c: Crossing) -> str:
    return c.gamma
