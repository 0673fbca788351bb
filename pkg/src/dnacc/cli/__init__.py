from .commands import COMMANDS
from .config import RunConfig
from .output import CommandResult, emit, render
from .parser import build_parser

__all__ = ["COMMANDS", "RunConfig", "CommandResult", "emit", "render", "build_parser"]
