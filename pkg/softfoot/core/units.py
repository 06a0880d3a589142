"""Length and angle parsing for config values.

Internally everything is SI (metres, radians). Config files may declare
`units = "mm"`; lengths may also be written as strings with an explicit
suffix ("20 mm"), which must agree with the declared units.
"""

from __future__ import annotations

import math
import re
from typing import Literal, TypeGuard

from .structured import as_float

__all__ = [
    "LengthUnit",
    "UnitError",
    "LENGTH_UNITS",
    "is_length_unit",
    "parse_length",
    "parse_angle",
    "from_metres",
]

LengthUnit = Literal["mm", "m"]

LENGTH_UNITS: tuple[LengthUnit, ...] = ("mm", "m")

_METRES_PER_UNIT: dict[LengthUnit, float] = {"mm": 1e-3, "m": 1.0}

_QUANTITY = re.compile(r"^\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*([a-z]+)\s*$")


class UnitError(ValueError):
    """A value could not be read as a quantity in the expected unit."""


def is_length_unit(value: object) -> TypeGuard[LengthUnit]:
    return value in LENGTH_UNITS


def _split_quantity(text: str) -> tuple[float, str] | None:
    match = _QUANTITY.match(text)
    if match is None:
        return None
    return float(match.group(1)), match.group(2)


def parse_length(value: object, units: LengthUnit) -> float:
    """Read a length in `units` (or with a matching suffix) and return metres.

    Raises:
        UnitError: if the value is not numeric or its suffix disagrees with `units`.
    """
    if isinstance(value, str):
        quantity = _split_quantity(value)
        if quantity is not None:
            magnitude, suffix = quantity
            if not is_length_unit(suffix):
                raise UnitError(f"unknown length unit '{suffix}'")
            if suffix != units:
                raise UnitError(f"unit mismatch: '{value.strip()}' in a {units} config")
            return magnitude * _METRES_PER_UNIT[suffix]
    number = as_float(value)
    if number is None:
        raise UnitError(f"expected a length, got {value!r}")
    return number * _METRES_PER_UNIT[units]


def parse_angle(value: object) -> float:
    """Read an angle in radians, or a string with a `deg`/`rad` suffix.

    Raises:
        UnitError: if the value is not an angle.
    """
    if isinstance(value, str):
        quantity = _split_quantity(value)
        if quantity is not None:
            magnitude, suffix = quantity
            if suffix == "deg":
                return math.radians(magnitude)
            if suffix == "rad":
                return magnitude
            raise UnitError(f"unknown angle unit '{suffix}'")
    number = as_float(value)
    if number is None:
        raise UnitError(f"expected an angle, got {value!r}")
    return number


def from_metres(value: float, units: LengthUnit) -> float:
    """Express a length in metres in `units`."""
    return value / _METRES_PER_UNIT[units]
