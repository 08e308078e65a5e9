"""Text and JSON formats for oriented link diagrams.

Text format, one record per line (blank lines and ``#`` comments ignored)::

    N <name>
    X <id> sign=<+|-> over=<arc> in=<arc> out=<arc>
    C <component> base=<arc> arcs=<arc,...>

The JSON mirror is ``{"name": ..., "crossings": [{"id", "sign", "over",
"in", "out"}], "components": [{"name", "base", "arcs"}]}``.
"""
import json
import logging
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from qf.core.errors import ParseError
from qf.links.diagram import Crossing, LinkDiagram, build_diagram

logger = logging.getLogger(__name__)


class CrossingModel(BaseModel):
    id: str
    sign: Union[int, str]
    over: str
    in_: str = Field(..., alias="in")
    out: str

    model_config = {"populate_by_name": True}


class ComponentModel(BaseModel):
    name: str
    base: str
    arcs: List[str]


class DiagramModel(BaseModel):
    name: Optional[str] = None
    crossings: List[CrossingModel] = []
    components: List[ComponentModel]


def _fields(tokens: List[str], lineno: int, required: List[str]) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for tok in tokens:
        if "=" not in tok:
            raise ParseError(f"line {lineno}: expected key=value, got {tok!r}", witness=(lineno, tok))
        key, value = tok.split("=", 1)
        if key in out:
            raise ParseError(f"line {lineno}: duplicate key {key}", witness=(lineno, key))
        out[key] = value
    missing = [k for k in required if k not in out]
    if missing:
        raise ParseError(f"line {lineno}: missing {', '.join(missing)}", witness=(lineno, *missing))
    unknown = sorted(set(out) - set(required))
    if unknown:
        raise ParseError(f"line {lineno}: unknown key {unknown[0]}", witness=(lineno, unknown[0]))
    return out


def parse_link(text: str) -> LinkDiagram:
    if text.lstrip().startswith("{"):
        return diagram_from_json(text)

    name: Optional[str] = None
    crossings: List[Crossing] = []
    components = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "N":
            if len(rest) != 1:
                raise ParseError(f"line {lineno}: N takes a single name", witness=(lineno,))
            name = rest[0]
        elif head == "X":
            if not rest:
                raise ParseError(f"line {lineno}: crossing id missing", witness=(lineno,))
            f = _fields(rest[1:], lineno, ["sign", "over", "in", "out"])
            crossings.append(Crossing(rest[0], f["sign"], f["over"], f["in"], f["out"]))
        elif head == "C":
            if not rest:
                raise ParseError(f"line {lineno}: component name missing", witness=(lineno,))
            f = _fields(rest[1:], lineno, ["base", "arcs"])
            arcs = [a for a in f["arcs"].split(",") if a]
            components.append((rest[0], f["base"], arcs))
        else:
            raise ParseError(f"line {lineno}: unknown record {head!r}", witness=(lineno, head))
    if not components:
        raise ParseError("a diagram needs at least one C line")
    D = build_diagram(crossings, components, name)
    logger.info("parsed diagram %s with %d crossings", name, len(D.crossings))
    return D


def _sign_token(s: int) -> str:
    return "+" if s > 0 else "-"


def format_link(D: LinkDiagram) -> str:
    lines = []
    if D.name:
        lines.append(f"N {D.name}")
    for c in D.crossings:
        lines.append(f"X {c.id} sign={_sign_token(c.sign)} over={c.over} in={c.under_in} out={c.under_out}")
    for comp in D.components:
        lines.append(f"C {comp.name} base={comp.base} arcs={','.join(comp.arcs)}")
    return "\n".join(lines) + "\n"


def diagram_to_model(D: LinkDiagram) -> DiagramModel:
    return DiagramModel(
        name=D.name,
        crossings=[
            CrossingModel(id=c.id, sign=_sign_token(c.sign), over=c.over, in_=c.under_in, out=c.under_out)
            for c in D.crossings
        ],
        components=[ComponentModel(name=k.name, base=k.base, arcs=list(k.arcs)) for k in D.components],
    )


def diagram_to_json(D: LinkDiagram) -> str:
    return json.dumps(diagram_to_model(D).model_dump(by_alias=True), sort_keys=True, indent=2)


def diagram_from_json(text: Union[str, dict]) -> LinkDiagram:
    try:
        data = json.loads(text) if isinstance(text, str) else text
        model = DiagramModel.model_validate(data)
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"invalid diagram JSON: {e}")
    crossings = [Crossing(c.id, c.sign, c.over, c.in_, c.out) for c in model.crossings]
    comps = [(k.name, k.base, k.arcs) for k in model.components]
    return build_diagram(crossings, comps, model.name)


def load_link(path: str) -> LinkDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_link(fh.read())
