"""Reading and writing the JSON files the CLI exchanges."""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from ..channel.model import ReadPool
from ..core.errors import ParseError
from ..primitives import Message, SystemParams
from .schemas import CodebookModel, MessageModel, ReadPoolModel

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=BaseModel)


def read_model(path, model_cls: Type[T]) -> T:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        return model_cls.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"{path} is not a valid {model_cls.__name__}: {e}") from e


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def write_text(text: str, path: Optional[str]) -> None:
    """Write to `path`, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)
    logger.debug(f"Wrote {len(text)} bytes to {target}")


def load_message(path) -> Message:
    return read_model(path, MessageModel).to_message()


def save_message(Z: Message, path: Optional[str]) -> None:
    write_text(dump_model(MessageModel.from_message(Z)), path)


def load_codebook(path) -> Tuple[SystemParams, List[Message]]:
    return read_model(path, CodebookModel).to_code()


def save_codebook(params: SystemParams, codewords: List[Message], path: Optional[str]) -> None:
    write_text(dump_model(CodebookModel.from_code(params, codewords)), path)


def load_read_pool(path) -> ReadPool:
    return read_model(path, ReadPoolModel).to_pool()


def save_read_pool(pool: ReadPool, path: Optional[str]) -> None:
    write_text(dump_model(ReadPoolModel.from_pool(pool)), path)
