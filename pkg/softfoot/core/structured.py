"""Narrowing of parsed TOML/JSON documents to typed values.

Config documents arrive as nested `dict`/`list` objects; these helpers are
the only place the package looks at them untyped.
"""

from __future__ import annotations

import math
from typing import cast

__all__ = ["StrDict", "as_str_dict", "as_obj_list", "as_int", "as_float", "is_annotation"]

StrDict = dict[str, object]


def as_str_dict(obj: object) -> StrDict | None:
    """A table with string keys, else None."""
    if not isinstance(obj, dict):
        return None
    table = cast(dict[object, object], obj)
    if not all(isinstance(k, str) for k in table):
        return None
    return cast(StrDict, table)


def as_obj_list(obj: object) -> list[object] | None:
    if not isinstance(obj, list):
        return None
    return cast(list[object], obj)


def as_int(value: object) -> int | None:
    """An int or base-10 string as int; booleans are not integers here."""
    match value:
        case bool():
            return None
        case int():
            return value
        case str() if value.strip():
            try:
                return int(value.strip())
            except ValueError:
                return None
        case _:
            return None


def as_float(value: object) -> float | None:
    """A finite float from an int, float or numeric string.

    Booleans, NaN and infinities give None.
    """
    match value:
        case bool():
            return None
        case int() | float():
            number = float(value)
        case str():
            try:
                number = float(value.strip())
            except ValueError:
                return None
        case _:
            return None
    return number if math.isfinite(number) else None


def is_annotation(key: str) -> bool:
    """Keys starting with `_` are notes, never config values."""
    return key.startswith("_")
