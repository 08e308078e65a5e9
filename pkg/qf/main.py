import argparse
import json
import logging
import sys
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, Field

from qf.commands import alexander, cohomology, extend, invariant, quandle, reproduce, twistspin
from qf.core.config import settings
from qf.core.errors import QuandleError
from qf.core.logging import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = (quandle, cohomology, extend, invariant, alexander, twistspin, reproduce)


class RunConfig(BaseModel):
    command: str
    threads: int = Field(settings.threads, ge=1)
    max_enum: int = Field(settings.max_enum, ge=1)
    format: Literal["text", "json"] = "text"
    log_level: str = settings.log_level
    seed: int = 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qf", description="Exact computations with finite quandles.")
    parser.add_argument("--threads", type=int, default=None, help="worker threads for coloring search")
    parser.add_argument("--max-enum", type=int, default=None, help="enumeration cap (default QF_MAX_ENUM)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers)
    return parser


def _config(args) -> RunConfig:
    values = {"command": args.command, "format": args.format, "seed": args.seed}
    for key in ("threads", "max_enum", "log_level"):
        if getattr(args, key) is not None:
            values[key] = getattr(args, key)
    return RunConfig(**values)


def _fail(err: ValueError, fmt: str) -> int:
    if fmt == "json":
        payload = err.to_dict() if isinstance(err, QuandleError) else {
            "type": type(err).__name__, "message": str(err), "witness": None
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"error: {err}", file=sys.stderr)
    return 1


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    fmt = args.format
    try:
        config = _config(args)
        configure_logging(config.log_level)
        logger.debug("qf %s (%s), threads=%d, max_enum=%d", config.command, settings.app_env,
                     config.threads, config.max_enum)
        result = args.handler(args, config)
    except ValueError as e:
        return _fail(e, fmt)
    print(result.render(fmt))
    return result.exit_code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
