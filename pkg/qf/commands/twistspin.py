from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from qf.commands import CommandResult
from qf.services.specs import resolve_quandle, resolve_tangle
from qf.twistspin.twist import TwistSpinProblem, twist_spin_colorings


class TwistSpinRequest(BaseModel):
    knot: str = Field(..., description="trefoil, figure8 or a knot diagram file")
    axis: Optional[str] = Field(None, description="arc to cut the diagram open at")
    quandle: str
    k: int = Field(..., ge=0)


class TwistSpinResponse(BaseModel):
    knot: str
    quandle: Optional[str]
    k: int
    fixed: int
    nontrivial: bool
    witness: Optional[Dict[str, str]] = None


def run(args, config) -> CommandResult:
    req = TwistSpinRequest(knot=args.knot, axis=args.axis, quandle=args.quandle, k=args.k)
    tangle = resolve_tangle(req.knot, req.axis)
    X = resolve_quandle(req.quandle)
    res = twist_spin_colorings(TwistSpinProblem(tangle, X, req.k), max_enum=config.max_enum, threads=config.threads)
    witness = res.witness.as_labels() if res.witness is not None else None
    resp = TwistSpinResponse(knot=req.knot, quandle=X.name, k=req.k, fixed=res.count,
                             nontrivial=res.nontrivial, witness=witness)
    lines: List[str] = [
        f"{req.k}-twist spun {req.knot} over {X.name}: {res.count} fixed colorings",
        "non-trivially colorable" if res.nontrivial else "only trivial colorings",
    ]
    if witness:
        lines.append("witness: " + ", ".join(f"{arc}={c}" for arc, c in witness.items()))
    return CommandResult("\n".join(lines), resp)


def register(subparsers) -> None:
    p = subparsers.add_parser("twistspin", help="colorings of the k-twist spun knot")
    p.add_argument("--knot", required=True, help="trefoil, figure8 or a knot diagram file")
    p.add_argument("--axis", default=None, help="axis arc of the tangle (default: the first arc)")
    p.add_argument("--quandle", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=run)
