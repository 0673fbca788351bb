"""Validated settings for one CLI invocation."""
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.settings import Budgets

# commands whose output depends on random choices
RANDOMIZED = {"simulate"}
RANDOMIZED_METHODS = {"search-greedy"}


class RunConfig(BaseModel):
    """Everything that determines a command's output. Equal configs give byte-identical output."""
    model_config = ConfigDict(frozen=True)

    command: str
    seed: Optional[int] = Field(None, ge=0, lt=2 ** 64)
    output: Optional[str] = None
    format: Literal["json", "csv", "text"] = "json"
    caps: Budgets = Field(default_factory=Budgets)
    options: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _require_seed(self):
        randomized = self.command in RANDOMIZED or self.options.get("method") in RANDOMIZED_METHODS
        if randomized and self.seed is None:
            raise ValueError(f"'{self.command}' draws random choices and needs an explicit --seed")
        return self

    def opt(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value
