from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from qf.commands import CommandResult
from qf.extensions.abelian import abelian_extension
from qf.extensions.wreath import wreath_quandle
from qf.quandles.io import extension_maps, maps_path, table_to_csv, write_extension_maps, write_table
from qf.quandles.quandle import FiniteQuandle, QuandleHom
from qf.services.specs import resolve_cocycle, resolve_quandle


class AbelianRequest(BaseModel):
    base: Optional[str] = Field(None, description="quandle spec; section cocycles bring their own")
    q: Optional[int] = Field(None, ge=1, description="coefficient modulus; must match the cocycle")
    cocycle: str
    out: Optional[str] = None


class WreathRequest(BaseModel):
    base: str = Field(..., description="r<n> with n odd, or qs4")
    v: int = Field(..., ge=1)
    out: Optional[str] = None


class ExtensionResponse(BaseModel):
    name: Optional[str]
    base: Optional[str]
    size: int
    fiber_sizes: List[int]
    labels: List[str]
    projection: Dict[str, str]
    section: Dict[str, str]
    maps_file: Optional[str] = None


def _finish(total: FiniteQuandle, base: FiniteQuandle, proj: QuandleHom, out: Optional[str],
            section: Optional[Sequence[int]] = None) -> CommandResult:
    maps = extension_maps(proj, section)
    resp = ExtensionResponse(
        name=total.name, base=base.name, size=len(total), fiber_sizes=list(proj.fiber_sizes()),
        labels=list(total.labels), projection=maps.projection, section=maps.section,
    )
    if out:
        write_table(total, out)
        target = maps_path(out)
        write_extension_maps(maps, target)
        resp.maps_file = str(target)
        return CommandResult(f"wrote {total.describe()} over {base.name} to {out}, maps to {target}", resp)
    lines = [table_to_csv(total).rstrip("\n"), "", "section:"]
    lines += [f"  {x} -> {e}" for x, e in maps.section.items()]
    return CommandResult("\n".join(lines), resp)


def _cocycle_spec(req: AbelianRequest) -> str:
    # a bare zero cocycle takes its modulus from --q
    if req.cocycle.strip() == "zero" and req.q is not None:
        return f"zero:{req.q}"
    return req.cocycle


def abelian(args, config) -> CommandResult:
    req = AbelianRequest(base=args.base, q=args.q, cocycle=args.cocycle, out=args.out)
    X = resolve_quandle(req.base) if req.base else None
    phi, X = resolve_cocycle(_cocycle_spec(req), X)
    if req.q is not None and req.q != phi.q:
        raise ValueError(f"--q must match the cocycle's coefficient modulus {phi.q}, got {req.q}")
    ext = abelian_extension(X, phi.q, phi)
    return _finish(ext.total, X, ext.projection, req.out, ext.section)


def wreath(args, config) -> CommandResult:
    req = WreathRequest(base=args.base, v=args.v, out=args.out)
    W = wreath_quandle(req.base, req.v)
    return _finish(W.quandle, W.base, W.projection, req.out)


def register(subparsers) -> None:
    p = subparsers.add_parser("extend", help="abelian and wreath extensions")
    sub = p.add_subparsers(dest="kind", required=True)

    a = sub.add_parser("abelian", help="E(X, Z_q, phi) for a 2-cocycle phi")
    a.add_argument("--base", "--quandle", dest="base", default=None, help="quandle spec of X")
    a.add_argument("--q", type=int, default=None, help="coefficient modulus of the cocycle")
    a.add_argument("--cocycle", required=True, help="zero, zero:<q>, section:w:<q>:<m>, section:u:<q>:<m> or a file")
    a.add_argument("--out", default=None, help="table path; the maps go next to it as <stem>.maps.json")
    a.set_defaults(handler=abelian)

    w = sub.add_parser("wreath", help="R_n(v) or QS_4(u) inside Z_v wr S_n")
    w.add_argument("--base", required=True, help="r<n> (n odd) or qs4")
    w.add_argument("--v", type=int, required=True)
    w.add_argument("--out", default=None, help="table path; the maps go next to it as <stem>.maps.json")
    w.set_defaults(handler=wreath)
