"""Deterministic JSON rendering: sorted keys, floats with 17 significant digits."""

import json
import math
from enum import Enum
from typing import Any


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        return "null"
    text = format(value, ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def render(document: Any) -> str:
    if isinstance(document, bool) or document is None:
        return json.dumps(document)
    if isinstance(document, Enum):
        return render(document.value)
    if isinstance(document, int):
        return str(document)
    if isinstance(document, float):
        return _format_float(document)
    if isinstance(document, str):
        return json.dumps(document)
    if isinstance(document, dict):
        items = sorted((str(k), v) for k, v in document.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {render(v)}" for k, v in items) + "}"
    if isinstance(document, (list, tuple)):
        return "[" + ", ".join(render(v) for v in document) + "]"
    # numpy scalars and anything else float-like
    return _format_float(float(document))
