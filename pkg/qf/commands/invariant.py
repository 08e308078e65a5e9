import json
import logging
import random
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from qf.commands import CommandResult
from qf.homology.cocycles import Cochain, coboundary, random_cochain
from qf.invariants.colorings import enumerate_colorings
from qf.invariants.state_sum import InvariantModel, psi
from qf.services.specs import resolve_cocycle, resolve_link, resolve_quandle

logger = logging.getLogger(__name__)


class InvariantRequest(BaseModel):
    link: Optional[str] = None
    link_file: Optional[str] = None
    quandle: Optional[str] = None
    cocycle: str = "zero"
    shape: Literal["scalar", "vector", "family"] = "scalar"
    check_coboundary: int = Field(0, ge=0, description="Re-run with phi + delta f for this many random f")

    @model_validator(mode="after")
    def _one_link(self):
        if bool(self.link) == bool(self.link_file):
            raise ValueError("give exactly one of --link and --link-file")
        return self


class InvariantResponse(BaseModel):
    shape: str
    value: str
    invariant: InvariantModel
    coboundary_checks: int = 0


def run(args, config) -> CommandResult:
    req = InvariantRequest(
        link=args.link, link_file=args.link_file, quandle=args.quandle, cocycle=args.cocycle,
        shape=args.shape, check_coboundary=args.check_coboundary,
    )
    D = resolve_link(req.link, req.link_file)
    X = resolve_quandle(req.quandle) if req.quandle else None
    phi, X = resolve_cocycle(req.cocycle, X)
    colorings = enumerate_colorings(D, X, max_enum=config.max_enum, threads=config.threads)
    value = psi(D, X, phi, colorings=colorings)
    text = {"scalar": value.format_scalar, "vector": value.format_vector, "family": value.format_family}[req.shape]()

    rng = random.Random(config.seed)
    for k in range(req.check_coboundary):
        f = random_cochain(X, 1, phi.q, rng)
        shifted = Cochain.from_array(X, 2, phi.q, phi.values + coboundary(f).values)
        other = psi(D, X, shifted, colorings=colorings)
        if other.family() != value.family():
            raise ValueError(f"state sum changed under the coboundary of random 1-cochain #{k + 1}")
    if req.check_coboundary:
        logger.info("state sum unchanged under %d random coboundaries (seed %d)", req.check_coboundary, config.seed)

    resp = InvariantResponse(shape=req.shape, value=text, invariant=value.to_model(),
                             coboundary_checks=req.check_coboundary)
    block = json.dumps(resp.invariant.model_dump(), sort_keys=True, indent=2)
    return CommandResult(f"{text}\n{block}", resp)


def register(subparsers) -> None:
    p = subparsers.add_parser("invariant", help="cocycle state sum of a link")
    p.add_argument("--link", default=None, help="built-in name: unknot, hopf, trefoil, figure8, whitehead, borromean")
    p.add_argument("--link-file", default=None, help="diagram in the text or JSON format")
    p.add_argument("--quandle", default=None)
    p.add_argument("--cocycle", default="zero")
    p.add_argument("--shape", choices=("scalar", "vector", "family"), default="scalar")
    p.add_argument("--check-coboundary", type=int, default=0, metavar="N")
    p.set_defaults(handler=run)
