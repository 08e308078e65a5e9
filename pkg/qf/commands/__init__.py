import json
from dataclasses import dataclass

from pydantic import BaseModel


@dataclass(frozen=True)
class CommandResult:
    """What a subcommand hands back to dispatch: a text rendering and its JSON model."""

    text: str
    payload: BaseModel
    exit_code: int = 0

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload.model_dump(), sort_keys=True, indent=2)
        return self.text
