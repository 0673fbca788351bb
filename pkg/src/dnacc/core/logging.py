import logging
import logging.config
import sys
from pathlib import Path
from typing import Optional

import yaml

from .constants import LOG_DATEFMT, LOG_FORMAT


def setup_logging(config_path=None, level: Optional[str] = None):
    """
    Setup standardized logging for the application

    Args:
        config_path: Optional logging YAML (dictConfig schema)
        level: Optional level name overriding the configured one

    Returns:
        The `dnacc` package logger
    """
    path = Path(config_path) if config_path else None
    if path is not None and path.exists():
        with open(path, 'r') as f:
            logging.config.dictConfig(yaml.safe_load(f))
    else:
        logging.basicConfig(
            level=logging.INFO,
            format=LOG_FORMAT,
            datefmt=LOG_DATEFMT,
            stream=sys.stderr,
        )

    logger = logging.getLogger("dnacc")
    if level:
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    return logger
