# app/text_io.py
"""Reading source files: UTF-8, BOM stripped, NFC-normalized, LF line endings."""

import logging
import unicodedata
from pathlib import Path
from typing import Union

from app.exceptions import SourceEncodingError

logger = logging.getLogger(__name__)

BOM = '\ufeff'


def normalize_source(text: str) -> str:
    if text.startswith(BOM):
        text = text[len(BOM):]
    text = text.replace('\r\n', '\n').replace('\r', '\n')
    return unicodedata.normalize('NFC', text)


def read_source(path: Union[str, Path]) -> str:
    """
    Read a UTF-8 input file.

    Raises:
        SourceEncodingError: the file is not valid UTF-8; carries the path and
            the line holding the first undecodable byte.
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as exc:
        line = data.count(b'\n', 0, exc.start) + 1
        raise SourceEncodingError(
            f"byte 0x{data[exc.start]:02x} at offset {exc.start} is not valid UTF-8",
            line=line,
            source=str(path),
        ) from exc
    logger.debug("Read %d characters from %s", len(text), path)
    return normalize_source(text)
