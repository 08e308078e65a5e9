from typing import List

from pydantic import BaseModel

from qf.commands import CommandResult
from qf.services.reproduce import ALIASES, REPRODUCERS, reproduce


class CheckModel(BaseModel):
    case: str
    ok: bool
    detail: str


class ReportModel(BaseModel):
    example: str
    ok: bool
    checks: List[CheckModel]


class ReproduceResponse(BaseModel):
    ok: bool
    reports: List[ReportModel]


def run(args, config) -> CommandResult:
    reports = reproduce(args.example)
    resp = ReproduceResponse(
        ok=all(r.ok for r in reports),
        reports=[
            ReportModel(example=r.example, ok=r.ok,
                        checks=[CheckModel(case=c.case, ok=c.ok, detail=c.detail) for c in r.checks])
            for r in reports
        ],
    )
    lines = [line for r in reports for line in r.lines()]
    return CommandResult("\n".join(lines), resp, exit_code=0 if resp.ok else 1)


def register(subparsers) -> None:
    p = subparsers.add_parser("reproduce", help="re-run the worked examples and report PASS/FAIL")
    p.add_argument("example", help=f"one of {', '.join(REPRODUCERS)}, all, or an alias ({', '.join(ALIASES)})")
    p.set_defaults(handler=run)
