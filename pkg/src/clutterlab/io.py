"""Reading and writing clutters as text or JSON.

Text format: the first significant line holds "n d"; every following
significant line lists the d vertices of one circuit, space separated
and 1-based.  Lines starting with # and blank lines are ignored, and
duplicate circuits collapse.  A file whose first significant character
is "{" is parsed as the JSON form instead:

    {"n": 5, "d": 3, "circuits": [[1, 2, 3], [1, 4, 5]]}

Parse failures raise ClutterParseError carrying the offending line
number.
"""

from __future__ import annotations

import json
from typing import Any

from .clutter import Clutter, make_clutter


class ClutterParseError(ValueError):
    """Malformed clutter input; .line is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


def clutter_from_json_dict(obj: Any) -> Clutter:
    """Build a clutter from the parsed JSON object form."""
    if not isinstance(obj, dict):
        raise ClutterParseError(f"JSON clutter must be an object, got {type(obj).__name__}")
    missing = {"n", "d", "circuits"} - obj.keys()
    if missing:
        raise ClutterParseError(f"JSON clutter lacks keys: {sorted(missing)}")
    n, d, circuits = obj["n"], obj["d"], obj["circuits"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise ClutterParseError("JSON clutter n and d must be integers")
    if not isinstance(circuits, list) or not all(isinstance(c, list) for c in circuits):
        raise ClutterParseError("JSON clutter circuits must be a list of lists")
    try:
        return make_clutter(n, d, circuits)
    except ValueError as exc:
        raise ClutterParseError(str(exc)) from exc


def clutter_to_json_dict(clutter: Clutter) -> dict[str, Any]:
    return {
        "n": clutter.n,
        "d": clutter.d,
        "circuits": [list(c) for c in clutter.circuits],
    }


def parse_clutter(text: str) -> Clutter:
    """Parse the text or JSON form of a clutter."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ClutterParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
        return clutter_from_json_dict(obj)

    header: tuple[int, int] | None = None
    circuits: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ClutterParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise ClutterParseError(
                    f"header must be 'n d', got {len(values)} values", lineno)
            header = (values[0], values[1])
            continue
        if len(values) != header[1]:
            raise ClutterParseError(
                f"circuit has {len(values)} vertices, expected d = {header[1]}", lineno)
        circuits.append(values)
    if header is None:
        raise ClutterParseError("empty input: no 'n d' header found")
    try:
        return make_clutter(header[0], header[1], circuits)
    except ValueError as exc:
        raise ClutterParseError(str(exc)) from exc


def parse_clutter_file(path: str) -> Clutter:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ClutterParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_clutter(text)
    except ClutterParseError as exc:
        raise ClutterParseError(f"{path}: {exc.message}", exc.line) from exc


def clutter_to_text(clutter: Clutter) -> str:
    """Serialize in the plain text format (parse_clutter inverts this)."""
    lines = [f"{clutter.n} {clutter.d}"]
    lines.extend(" ".join(map(str, c)) for c in clutter.circuits)
    return "\n".join(lines) + "\n"


def clutter_to_json(clutter: Clutter) -> str:
    return json.dumps(clutter_to_json_dict(clutter), indent=2) + "\n"
