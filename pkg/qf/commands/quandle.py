from typing import List, Optional

from pydantic import BaseModel, Field

from qf.commands import CommandResult
from qf.quandles.io import table_to_csv, table_to_model, QuandleTableModel, write_table
from qf.quandles.quandle import FiniteQuandle
from qf.services.specs import resolve_quandle


class QuandleRequest(BaseModel):
    spec: str = Field(..., description="Quandle spec string or table file")
    out: Optional[str] = Field(None, description="Write the table here (.csv or .json)")


class QuandleSummary(BaseModel):
    name: Optional[str]
    size: int
    connected: bool
    trivial: bool
    labels: List[str]
    table: Optional[QuandleTableModel] = None


def summarize(Q: FiniteQuandle, with_table: bool = False) -> QuandleSummary:
    return QuandleSummary(
        name=Q.name,
        size=len(Q),
        connected=Q.is_connected(),
        trivial=Q.is_trivial(),
        labels=list(Q.labels),
        table=table_to_model(Q) if with_table else None,
    )


def validate(args, config) -> CommandResult:
    req = QuandleRequest(spec=args.spec)
    Q = resolve_quandle(req.spec)
    s = summarize(Q)
    text = f"ok: {Q.describe()}, connected={s.connected}, trivial={s.trivial}"
    return CommandResult(text, s)


def make(args, config) -> CommandResult:
    req = QuandleRequest(spec=args.spec, out=args.out)
    Q = resolve_quandle(req.spec)
    if req.out:
        write_table(Q, req.out)
        return CommandResult(f"wrote {Q.describe()} to {req.out}", summarize(Q))
    return CommandResult(table_to_csv(Q).rstrip("\n"), summarize(Q, with_table=True))


def register(subparsers) -> None:
    p = subparsers.add_parser("quandle", help="validate or tabulate finite quandles")
    sub = p.add_subparsers(dest="action", required=True)

    v = sub.add_parser("validate", help="check the quandle axioms")
    v.add_argument("spec", help="dihedral:<n>, qs4, w:<q>:<m>, ... or a .csv/.json table")
    v.set_defaults(handler=validate)

    m = sub.add_parser("make", help="build a quandle and print or write its table")
    m.add_argument("spec")
    m.add_argument("--out", default=None, help="output path, .csv or .json")
    m.set_defaults(handler=make)
