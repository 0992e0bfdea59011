"""Artifact writers: delimited text, JSON, and atomic file replacement.

Every artifact carries a provenance block (resolved inputs + version).
Floats are serialized with shortest round-trip precision; CSV uses '.'
decimals, ',' delimiters, and LF line endings.  Writes go through a
temporary file in the target directory followed by an atomic replace,
so a killed run never leaves a partial artifact.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from . import __version__


def format_value(value) -> str:
    """Shortest round-trip text for a CSV field; None becomes empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(float(value))
    if isinstance(value, int):
        return str(value)
    return str(value)


def meta_block(inputs: dict) -> dict:
    """Provenance block carried by every artifact."""
    return {"inputs": inputs, "version": __version__}


def csv_text(header: list[str], rows, meta: dict | None = None) -> str:
    """Render rows to CSV with an optional '# meta:' provenance line."""
    lines = []
    if meta is not None:
        lines.append("# meta: " + json.dumps(meta, sort_keys=True))
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_text_atomic(path, text: str) -> None:
    """Write text to ``path`` via a same-directory temp file + rename."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
