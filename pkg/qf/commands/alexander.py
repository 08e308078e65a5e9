import math
from typing import List, Optional

from pydantic import BaseModel, Field

from qf.alexander.conway import conway_min_degree
from qf.alexander.inoue import inoue_count, invariant_factors
from qf.alexander.matrix import alexander_matrix, kernel_colorings
from qf.commands import CommandResult
from qf.core.errors import ParseError
from qf.services.specs import resolve_link, resolve_ring


class AlexanderRequest(BaseModel):
    link: Optional[str] = None
    link_file: Optional[str] = None
    ring: Optional[str] = Field(None, description="q:h, colorings by Z_q[T,T^-1]/(h) via the matrix kernel")
    inoue: Optional[str] = Field(None, description="p:J, coloring count by Lambda_p/J")
    conway: bool = False
    bound: bool = False
    family: str = "W"
    q: int = Field(2, ge=2)
    max_level: int = Field(4, ge=1)


class ConwayModel(BaseModel):
    nabla: str
    min_degree: Optional[int]
    bound_level: Optional[int] = None
    bound_holds: Optional[bool] = None


class AlexanderResponse(BaseModel):
    link: Optional[str]
    rows: List[str]
    cols: List[str]
    matrix: List[List[str]]
    kernel_colorings: Optional[int] = None
    invariant_factors: Optional[List[str]] = None
    inoue_count: Optional[int] = None
    conway: Optional[ConwayModel] = None


def _parse_inoue(text: str):
    p, sep, J = text.partition(":")
    if not sep or not J:
        raise ParseError(f"--inoue wants p:J, got {text!r}")
    try:
        return int(p), J
    except ValueError:
        raise ParseError(f"p must be an integer, got {p!r}")


def run(args, config) -> CommandResult:
    req = AlexanderRequest(
        link=args.link, link_file=args.link_file, ring=args.ring, inoue=args.inoue,
        conway=args.conway, bound=args.bound, family=args.family, q=args.q, max_level=args.max_level,
    )
    D = resolve_link(req.link, req.link_file)
    A = alexander_matrix(D)
    lines = [A.format_table()]
    resp = AlexanderResponse(
        link=D.name, rows=list(A.matrix.row_labels), cols=list(A.matrix.col_labels), matrix=A.matrix.to_grid()
    )
    if req.ring:
        r = resolve_ring(req.ring)
        n = len(kernel_colorings(D, r, max_enum=config.max_enum))
        resp.kernel_colorings = n
        lines.append(f"colorings by {r.describe()}: {n}")
    if req.inoue:
        p, J = _parse_inoue(req.inoue)
        factors = [str(e.as_expr()) for e in invariant_factors(D, p)]
        count = inoue_count(D, p, J)
        resp.invariant_factors = factors
        resp.inoue_count = count
        lines.append(f"e_i over F_{p}[T]: {', '.join(factors) or '-'}")
        lines.append(f"colorings by Lambda_{p}/({J}): {count}")
    if req.conway:
        data = conway_min_degree(
            D, check_bound=req.bound, family=req.family, q=req.q, max_level=req.max_level, max_enum=config.max_enum
        )
        finite = data.min_degree != math.inf
        resp.conway = ConwayModel(
            nabla=data.format_nabla(), min_degree=int(data.min_degree) if finite else None,
            bound_level=data.bound_level, bound_holds=data.bound_holds,
        )
        lines.append(f"nabla = {data.format_nabla()}")
        lines.append(f"min-deg = {int(data.min_degree) if finite else 'inf'}")
        if req.bound:
            lines.append(f"smallest non-trivial {req.family} level (q={req.q}) = {data.bound_level}, "
                         f"bound holds: {data.bound_holds}")
    return CommandResult("\n".join(lines), resp)


def register(subparsers) -> None:
    p = subparsers.add_parser("alexander", help="Alexander matrix, kernel colorings, Inoue counts, Conway degree")
    p.add_argument("--link", default=None)
    p.add_argument("--link-file", default=None)
    p.add_argument("--ring", default=None, metavar="Q:H")
    p.add_argument("--inoue", default=None, metavar="P:J")
    p.add_argument("--conway", action="store_true")
    p.add_argument("--bound", action="store_true", help="compare min-deg with the smallest non-trivial level")
    p.add_argument("--family", choices=("W", "U"), default="W")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--max-level", type=int, default=4)
    p.set_defaults(handler=run)
