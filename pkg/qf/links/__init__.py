from qf.links.builtins import builtin, builtin_tangle
from qf.links.diagram import (
    Component,
    Crossing,
    LinkDiagram,
    Tangle,
    alpha_arc,
    build_diagram,
    component_crossing_sets,
    gamma_arc,
    with_base_points,
)
from qf.links.parser import diagram_from_json, diagram_to_json, format_link, load_link, parse_link
