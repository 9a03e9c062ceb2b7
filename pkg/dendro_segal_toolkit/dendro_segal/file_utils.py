"""
file_utils.py - JSON document IO.

Every JSON argument of the CLI may be a path or an inline document. Reports
are written to the output directory, which ``DST_OUTPUT_DIR`` overrides.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any

from dendro_segal_toolkit.dst_core.exceptions import SerializationError

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "DST_OUTPUT_DIR"


def read_json_argument(argument: str) -> Any:
    """
    Parse ``argument`` as inline JSON when it looks like a document, else read it as a file.

    Raises:
        SerializationError: if the text is not valid JSON or the file cannot be read
    """
    text = argument.strip()
    if text[:1] in ("{", "[", '"') or text in ("true", "false", "null"):
        source = "inline document"
    else:
        source = argument
        try:
            text = Path(argument).expanduser().read_text(encoding="utf-8")
        except OSError as e:
            raise SerializationError(f"Could not read {argument}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"Invalid JSON in {source}: {e}") from e


def output_directory() -> Path:
    directory = Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def write_json(filename: str, data: Any) -> Path:
    """Write ``data`` into the output directory and return the path."""
    path = output_directory() / filename
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
    logger.info(f"Wrote {path}")
    return path


def dumps(data: Any, pretty: bool = True) -> str:
    return json.dumps(data, indent=2 if pretty else None, ensure_ascii=False)
