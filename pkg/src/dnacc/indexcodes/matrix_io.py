"""Plain-text matrices: one code row per line, M bit strings separated by spaces.

A header comment `# l=2 M=4 d=2` carries the code parameters; other `#`
lines are ignored.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..core.errors import InputError, ParseError
from .tuples import IndexCode, IndexTuple, min_index_distance

logger = logging.getLogger(__name__)

_HEADER_FIELD = re.compile(r"\b([lMd])\s*=\s*(\d+)")


def format_matrix(code: IndexCode) -> str:
    lines = [f"# l={code.l} M={code.M} d={code.d}"]
    lines.extend(str(row) for row in code.rows)
    return "\n".join(lines) + "\n"


def parse_rows(text: str) -> Tuple[Dict[str, int], List[IndexTuple]]:
    """Header fields and rows in file order, duplicates kept."""
    header: Dict[str, int] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header.update((k, int(v)) for k, v in _HEADER_FIELD.findall(line))
            continue
        try:
            rows.append(IndexTuple.from_strs(line.split()))
        except InputError as e:
            raise ParseError(f"line {lineno}: {e}") from e

    if not rows:
        raise ParseError("matrix holds no rows")
    l, M = rows[0].l, rows[0].M
    for key, actual in (("l", l), ("M", M)):
        if key in header and header[key] != actual:
            raise ParseError(f"header says {key}={header[key]} but rows have {key}={actual}")
    for row in rows:
        if row.l != l or row.M != M:
            raise ParseError(f"row '{row}' does not have l={l}, M={M}")
    return header, rows


def parse_matrix(text: str, d: Optional[int] = None) -> IndexCode:
    """
    Parse matrix text into a code. An explicit `d` overrides the header; with
    neither, d is the minimum index-distance of the rows.
    """
    header, rows = parse_rows(text)
    if d is None:
        d = header.get("d")
    if d is None:
        d = min_index_distance(rows) or 0
        logger.debug(f"no d given; using the rows' minimum index-distance {d}")
    if len(set(rows)) != len(rows):
        logger.warning(f"matrix repeats {len(rows) - len(set(rows))} rows; duplicates dropped")
    return IndexCode(rows[0].l, rows[0].M, d, tuple(rows))


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def read_rows(path: Union[str, Path]) -> Tuple[Dict[str, int], List[IndexTuple]]:
    return parse_rows(_read_text(path))


def read_matrix(path: Union[str, Path], d: Optional[int] = None) -> IndexCode:
    return parse_matrix(_read_text(path), d)


def write_matrix(code: IndexCode, path: Union[str, Path]) -> None:
    Path(path).write_text(format_matrix(code))
    logger.info(f"wrote {code.size} rows to {path}")
