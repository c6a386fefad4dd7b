"""Poset file parsing and report rendering.

Two input formats are accepted.  The text format has the element count on
the first line and one cover relation per line after it:

    3
    1 < 3
    2 < 3

The structured format is a JSON object {"n": ..., "covers": [[a, b], ...]}.
Reports render as canonical JSON (sorted keys, two-space indent), or as
TSV / plain text projections of the flattened key paths; all three are
byte-deterministic for a fixed input and configuration.
"""

import json
import re

from .errors import ParseError
from .posets import poset_from_covers

_COVER_LINE = re.compile(r"^(\d+)\s*<\s*(\d+)$")


def parse_poset(text):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON poset: {exc}") from exc
        if not isinstance(obj, dict) or "n" not in obj or "covers" not in obj:
            raise ParseError("JSON poset needs 'n' and 'covers' fields")
        try:
            covers = [(int(a), int(b)) for a, b in obj["covers"]]
            return poset_from_covers(int(obj["n"]), covers)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed JSON poset: {exc}") from exc
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty poset file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the element count: {lines[0]!r}") from exc
    covers = []
    for line in lines[1:]:
        match = _COVER_LINE.match(line)
        if not match:
            raise ParseError(f"malformed cover line {line!r} (expected 'a < b')")
        covers.append((int(match.group(1)), int(match.group(2))))
    return poset_from_covers(n, covers)


def load_poset(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read poset file {path}: {exc}") from exc
    return parse_poset(text)


def render_json(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _flatten(payload, prefix=""):
    items = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            items.extend(_flatten(payload[key], f"{prefix}{key}."))
    elif isinstance(payload, (list, tuple)) and any(
        isinstance(v, (dict, list, tuple)) for v in payload
    ):
        for i, value in enumerate(payload):
            items.extend(_flatten(value, f"{prefix}{i}."))
    else:
        value = payload
        if isinstance(value, (list, tuple)):
            value = json.dumps(list(value))
        items.append((prefix[:-1], value))
    return items


def render_tsv(payload):
    lines = [f"{key}\t{value}" for key, value in _flatten(payload)]
    return "\n".join(lines) + "\n"


def render_text(payload):
    lines = [f"{key}: {value}" for key, value in _flatten(payload)]
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "tsv": render_tsv, "text": render_text}
