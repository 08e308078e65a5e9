from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from qf.commands import CommandResult
from qf.homology.cocycles import CochainModel
from qf.homology.cohomology import cohomology_dimension, cohomology_generators
from qf.services.specs import resolve_quandle


class CohomologyRequest(BaseModel):
    quandle: str
    degree: int = Field(..., ge=0)
    prime: int = Field(..., ge=2)
    theory: Literal["rack", "degenerate", "quandle"] = "quandle"
    generators: bool = False


class CohomologyResponse(BaseModel):
    quandle: Optional[str]
    degree: int
    prime: int
    theory: str
    dim: int
    generators: List[CochainModel] = []


def run(args, config) -> CommandResult:
    req = CohomologyRequest(
        quandle=args.quandle, degree=args.degree, prime=args.prime, theory=args.theory, generators=args.generators
    )
    X = resolve_quandle(req.quandle)
    dim = cohomology_dimension(req.degree, X, req.prime, req.theory, max_enum=config.max_enum)
    lines = [f"dim = {dim}"]
    gens = []
    if req.generators:
        gens = cohomology_generators(req.degree, X, req.prime, req.theory, max_enum=config.max_enum)
        for k, g in enumerate(gens, 1):
            support = ", ".join(f"{'|'.join(X.labels[i] for i in t)}:{v}" for t, v in sorted(g.support().items()))
            lines.append(f"generator {k}: {support}")
    resp = CohomologyResponse(
        quandle=X.name, degree=req.degree, prime=req.prime, theory=req.theory, dim=dim,
        generators=[g.to_model() for g in gens],
    )
    return CommandResult("\n".join(lines), resp)


def register(subparsers) -> None:
    p = subparsers.add_parser("cohomology", help="dimension of H^n over F_p")
    p.add_argument("--quandle", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--theory", choices=("rack", "degenerate", "quandle"), default="quandle")
    p.add_argument("--generators", action="store_true", help="also print cocycles representing a basis")
    p.set_defaults(handler=run)
