"""Rendering command results as JSON, CSV or a text table."""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from ..core.errors import DnaccError
from ..models.files import write_text


@dataclass
class CommandResult:
    """
    What a command produced.

    `payload` is the JSON document; `table` the rows shown for csv/text;
    `raw`, when set, is written as-is in every format (matrix files).
    `failure` is raised after the output is written.
    """
    payload: Any
    table: List[Dict[str, Any]] = field(default_factory=list)
    raw: Optional[str] = None
    failure: Optional[DnaccError] = None


def render(result: CommandResult, fmt: str) -> str:
    if result.raw is not None:
        return result.raw
    if fmt == "json":
        return json.dumps(result.payload, indent=2) + "\n"
    frame = pd.DataFrame(result.table)
    if fmt == "csv":
        return frame.to_csv(index=False)
    if frame.empty:
        return ""
    return frame.to_string(index=False) + "\n"


def emit(result: CommandResult, fmt: str, path: Optional[str]) -> None:
    write_text(render(result, fmt), path)
