"""
Run configuration for the command-line front end
"""
from pathlib import Path
from typing import Dict, List, Optional
import enum

from pydantic import BaseModel, Field, model_validator

from app.models.reports import SearchDirection


class Command(str, enum.Enum):
    INDEX = "index"
    SPECTRUM = "spectrum"
    CONSTRUCT = "construct"
    BOUNDS = "bounds"
    HYPOTHESIS = "hypothesis"
    VERIFY = "verify"


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


_REQUIRED: Dict[Command, List[str]] = {
    Command.INDEX: ["input_path", "index_name"],
    Command.SPECTRUM: ["input_path"],
    Command.CONSTRUCT: ["family", "n"],
    Command.BOUNDS: ["n", "index_name"],
    Command.HYPOTHESIS: ["index_name"],
    Command.VERIFY: ["n", "index_name"],
}


class RunConfig(BaseModel):
    """Validated command-line options"""
    command: Command
    input_path: Optional[Path] = None
    index_name: Optional[str] = None
    n: Optional[int] = None
    n_override: Optional[int] = Field(default=None, ge=1)
    direction: Optional[SearchDirection] = None
    workers: int = Field(default=1, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT

    family: Optional[str] = None
    theorem: Optional[str] = None
    n_max: int = Field(default=100, ge=2)
    allow_n6: bool = False
    include_theorems: bool = False
    dedup: bool = False
    exact: bool = False

    @model_validator(mode="after")
    def check_required(self) -> "RunConfig":
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command.value} requires: {', '.join(missing)}")
        return self
