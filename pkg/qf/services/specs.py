"""Turn the short spec strings used on the command line into objects.

quandles:  dihedral:<n>  trivial:<n>  qs4  alexander:<q>:<h>  w:<q>:<m>  u:<q>:<m>
           wreath:r<n>:<v>  wreath:qs4:<u>  or a .csv/.json table file
cocycles:  zero  zero:<q>  section:w:<q>:<m>  section:u:<q>:<m>  or a .json cochain file
rings:     <q>:<h>
knots:     trefoil  figure8  or a diagram file, cut open at --axis (default: its first arc)
"""
import logging
from pathlib import Path
from typing import Optional, Tuple

from qf.algebra.ring import FiniteRing, make_ring, u_ring, w_ring
from qf.core.errors import ParseError, UnknownName
from qf.extensions.abelian import cocycle_from_section
from qf.extensions.wreath import wreath_quandle
from qf.homology.cocycles import Cochain, cochain_from_json
from qf.links.builtins import BUILTINS, TANGLES, builtin, builtin_tangle
from qf.links.diagram import LinkDiagram, Tangle
from qf.links.parser import load_link
from qf.quandles.families import alexander_quandle, dihedral, qs4, trivial_quandle
from qf.quandles.io import read_table
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}")


def resolve_ring(spec: str) -> FiniteRing:
    q, sep, h = spec.partition(":")
    if not sep or not h:
        raise ParseError(f"ring spec must look like q:h, got {spec!r}")
    return make_ring(_int(q, "q"), h)


def resolve_quandle(spec: str) -> FiniteQuandle:
    text = spec.strip()
    if Path(text).suffix.lower() in (".csv", ".json") and Path(text).exists():
        return read_table(text)
    parts = text.split(":")
    kind = parts[0].lower()
    if kind == "dihedral" and len(parts) == 2:
        return dihedral(_int(parts[1], "n"))
    if kind == "trivial" and len(parts) == 2:
        return trivial_quandle(_int(parts[1], "n"))
    if kind == "qs4" and len(parts) == 1:
        return qs4()
    if kind == "alexander" and len(parts) == 3:
        return alexander_quandle(resolve_ring(f"{parts[1]}:{parts[2]}"))
    if kind == "w" and len(parts) == 3:
        return alexander_quandle(w_ring(_int(parts[1], "q"), _int(parts[2], "m")))
    if kind == "u" and len(parts) == 3:
        return alexander_quandle(u_ring(_int(parts[1], "q"), _int(parts[2], "m")))
    if kind == "wreath" and len(parts) == 3:
        return wreath_quandle(parts[1], _int(parts[2], "v")).quandle
    raise UnknownName(f"unknown quandle spec {spec!r}", witness=(spec,))


def resolve_cocycle(spec: str, X: Optional[FiniteQuandle]) -> Tuple[Cochain, FiniteQuandle]:
    """The cochain and the quandle it lives on; section cocycles bring their own W_m/U_m."""
    text = spec.strip()
    parts = text.split(":")
    if parts[0] == "section":
        if len(parts) != 4 or parts[1].lower() not in ("w", "u"):
            raise ParseError(f"section cocycles are section:w:q:m or section:u:q:m, got {spec!r}")
        phi = cocycle_from_section(parts[1].upper(), _int(parts[2], "q"), _int(parts[3], "m"))
        if X is not None and X != phi.quandle:
            raise ValueError(f"{spec} lives on {phi.quandle.name}, not on {X.name}")
        return phi, phi.quandle
    if X is None:
        raise ParseError(f"cocycle {spec!r} needs --quandle")
    if parts[0] == "zero":
        q = _int(parts[1], "q") if len(parts) == 2 else 1
        return Cochain.zero(X, 2, q), X
    path = Path(text)
    if path.exists():
        return cochain_from_json(path.read_text(encoding="utf-8"), X), X
    raise UnknownName(f"unknown cocycle spec {spec!r}", witness=(spec,))


def resolve_link(name: Optional[str] = None, path: Optional[str] = None) -> LinkDiagram:
    if path:
        return load_link(path)
    if name is None:
        raise ParseError("give --link <name> or --link-file <path>")
    if name not in BUILTINS and Path(name).exists():
        return load_link(name)
    return builtin(name)


def resolve_tangle(spec: str, axis: Optional[str] = None) -> Tangle:
    """A built-in 1-tangle, or a knot diagram file cut open at `axis`."""
    key = spec.strip().lower().replace("-", "")
    if key in TANGLES and axis is None:
        return builtin_tangle(spec)
    if key in TANGLES:
        D = builtin(spec)
    elif Path(spec).exists():
        D = load_link(spec)
    else:
        return builtin_tangle(spec)
    return Tangle(D, axis if axis is not None else D.arcs[0])
