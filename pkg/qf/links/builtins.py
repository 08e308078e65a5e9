from typing import Callable, Dict, List, Tuple

from qf.core.errors import UnknownName
from qf.links.diagram import Crossing, LinkDiagram, Tangle, build_diagram

# (sign, in, over, out); crossing ids follow the outgoing under-arc order


def _crossings(rows: List[Tuple[int, str, str, str]]) -> List[Crossing]:
    return [Crossing(f"t{i}", s, over, arc_in, arc_out) for i, (s, arc_in, over, arc_out) in enumerate(rows, 1)]


def unknot() -> LinkDiagram:
    return build_diagram([], [("K1", "a1", ["a1"])], "unknot")


def hopf() -> LinkDiagram:
    rows = [(1, "a1", "a2", "a1"), (1, "a2", "a1", "a2")]
    return build_diagram(_crossings(rows), [("K1", "a1", ["a1"]), ("K2", "a2", ["a2"])], "hopf")


def trefoil() -> LinkDiagram:
    rows = [
        (1, "a3", "a2", "a1"),
        (1, "a1", "a3", "a2"),
        (1, "a2", "a1", "a3"),
    ]
    return build_diagram(_crossings(rows), [("K1", "a1", ["a1", "a2", "a3"])], "trefoil")


def figure8() -> LinkDiagram:
    rows = [
        (-1, "a4", "a2", "a1"),
        (1, "a1", "a3", "a2"),
        (-1, "a2", "a4", "a3"),
        (1, "a3", "a1", "a4"),
    ]
    return build_diagram(_crossings(rows), [("K1", "a1", ["a1", "a2", "a3", "a4"])], "figure8")


def whitehead() -> LinkDiagram:
    """Six-crossing Whitehead link; t_i has outgoing under-arc w_i."""
    rows = [
        (-1, "w2", "w6", "w1"),
        (1, "w1", "w3", "w2"),
        (1, "w6", "w4", "w3"),
        (1, "w3", "w2", "w4"),
        (1, "w4", "w6", "w5"),
        (-1, "w5", "w2", "w6"),
    ]
    comps = [("K1", "w1", ["w1", "w2"]), ("K2", "w3", ["w3", "w4", "w5", "w6"])]
    return build_diagram(_crossings(rows), comps, "whitehead")


def borromean() -> LinkDiagram:
    """Borromean rings with outer arcs y1, y2, y3 and inner arcs y4, y5, y6.

    The outer crossings are positive and produce the inner arcs; the inner
    crossings are negative and produce the outer arcs.
    """
    rows = [
        (-1, "y4", "y5", "y1"),
        (1, "y1", "y2", "y4"),
        (-1, "y5", "y6", "y2"),
        (1, "y2", "y3", "y5"),
        (-1, "y6", "y4", "y3"),
        (1, "y3", "y1", "y6"),
    ]
    comps = [("K1", "y1", ["y1", "y4"]), ("K2", "y2", ["y2", "y5"]), ("K3", "y3", ["y3", "y6"])]
    return build_diagram(_crossings(rows), comps, "borromean")


BUILTINS: Dict[str, Callable[[], LinkDiagram]] = {
    "unknot": unknot,
    "hopf": hopf,
    "trefoil": trefoil,
    "figure8": figure8,
    "whitehead": whitehead,
    "borromean": borromean,
}

TANGLES = ("trefoil", "figure8")


def builtin(name: str) -> LinkDiagram:
    key = name.strip().lower().replace("-", "")
    if key not in BUILTINS:
        raise UnknownName(f"unknown link {name!r}; known: {', '.join(BUILTINS)}", witness=(name,))
    return BUILTINS[key]()


def builtin_tangle(name: str) -> Tangle:
    D = builtin(name)
    if name.strip().lower().replace("-", "") not in TANGLES:
        raise UnknownName(f"no built-in tangle for {name!r}; known: {', '.join(TANGLES)}", witness=(name,))
    return Tangle(D, D.arcs[0])
