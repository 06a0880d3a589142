"""Piecewise-linear terrain profiles and the default obstacle catalog.

Positions run along the walking direction from the heel, heights are above
the flat base. Between breakpoints the profile is linear; beyond the last
breakpoint it stays at the last height.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

__all__ = [
    "TerrainKind",
    "TerrainProfile",
    "DEFAULT_SOLE_LENGTH",
    "DEFAULT_TIP",
    "CATALOG_NAMES",
    "terrain_catalog",
    "catalog_terrain",
]

TerrainKind = Literal["flat", "step", "bump", "ridge", "custom"]

DEFAULT_SOLE_LENGTH = 0.219
DEFAULT_TIP = 0.115


@dataclass(frozen=True, slots=True)
class TerrainProfile:
    """Height field under the foot.

    Attributes:
        name: catalog label.
        kind: shape family.
        positions: strictly increasing breakpoints [m].
        heights: height at each breakpoint, ≥ 0 [m].
        softfoot_delta: δ seen by the articulated sole, h(tip) − h(0) [m].
        tip: heel-to-tip distance of the sole chain where δ is read [m].
    """

    name: str
    kind: TerrainKind
    positions: tuple[float, ...]
    heights: tuple[float, ...]
    softfoot_delta: float
    tip: float = DEFAULT_TIP

    def __post_init__(self) -> None:
        if len(self.positions) < 2 or len(self.positions) != len(self.heights):
            raise ValueError(f"terrain {self.name}: needs ≥ 2 breakpoints with one height each")
        if not all(math.isfinite(v) for v in (*self.positions, *self.heights, self.softfoot_delta)):
            raise ValueError(f"terrain {self.name}: breakpoints must be finite")
        if not (math.isfinite(self.tip) and self.tip > 0.0):
            raise ValueError(f"terrain {self.name}: tip must be > 0")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:], strict=False)):
            raise ValueError(f"terrain {self.name}: positions must be strictly increasing")
        if any(h < 0.0 for h in self.heights):
            raise ValueError(f"terrain {self.name}: heights must be ≥ 0")
        if self.kind == "flat" and (any(h != 0.0 for h in self.heights) or self.softfoot_delta):
            raise ValueError(f"terrain {self.name}: flat terrain must have zero heights and δ")

    @classmethod
    def from_points(
        cls,
        name: str,
        kind: TerrainKind,
        positions: Sequence[float],
        heights: Sequence[float],
        tip: float = DEFAULT_TIP,
    ) -> TerrainProfile:
        """Profile with δ measured at the sole tip contact `tip`."""
        if len(positions) != len(heights):
            raise ValueError(f"terrain {name}: needs ≥ 2 breakpoints with one height each")
        xs = tuple(float(x) for x in positions)
        hs = tuple(float(h) for h in heights)
        delta = float(np.interp(tip, xs, hs) - np.interp(0.0, xs, hs))
        return cls(
            name=name, kind=kind, positions=xs, heights=hs, softfoot_delta=delta, tip=float(tip)
        )

    def height_at(self, x: float) -> float:
        return float(np.interp(x, self.positions, self.heights))

    def breakpoints_within(self, start: float, stop: float) -> list[tuple[float, float]]:
        """(x, h) at `start`, every breakpoint strictly inside, and `stop`."""
        inner = [
            (x, h) for x, h in zip(self.positions, self.heights, strict=True) if start < x < stop
        ]
        return [(start, self.height_at(start)), *inner, (stop, self.height_at(stop))]


def _cosine_bump(start: float, stop: float, peak: float, samples: int) -> list[tuple[float, float]]:
    xs = np.linspace(start, stop, samples)
    hs = 0.5 * peak * (1.0 - np.cos(2.0 * np.pi * (xs - start) / (stop - start)))
    return [(float(x), float(max(h, 0.0))) for x, h in zip(xs, hs, strict=True)]


# (fraction of sole length, height [m]) per catalog entry
_SHAPES: dict[str, tuple[TerrainKind, list[tuple[float, float]]]] = {
    "flat": ("flat", [(0.0, 0.0), (1.0, 0.0)]),
    "low-ridge": (
        "ridge",
        [(0.0, 0.0), (0.50, 0.0), (0.53, 0.004), (0.60, 0.004), (0.63, 0.0), (1.0, 0.0)],
    ),
    "mid-bump": ("bump", [(0.0, 0.0), (0.40, 0.0), (0.50, 0.008), (0.60, 0.0), (1.0, 0.0)]),
    "step": ("step", [(0.0, 0.0), (0.45, 0.0), (0.46, 0.010), (1.0, 0.010)]),
    "round": ("bump", [(0.0, 0.0), *_cosine_bump(0.45, 0.85, 0.006, 13), (1.0, 0.0)]),
    "double-ridge": (
        "ridge",
        [
            (0.0, 0.0),
            (0.15, 0.0),
            (0.17, 0.005),
            (0.20, 0.005),
            (0.22, 0.0),
            (0.70, 0.0),
            (0.72, 0.005),
            (0.75, 0.005),
            (0.77, 0.0),
            (1.0, 0.0),
        ],
    ),
    "incline": ("custom", [(0.0, 0.0), (0.40, 0.0), (1.0, 0.012)]),
    "tall-step": ("step", [(0.0, 0.0), (0.55, 0.0), (0.56, 0.025), (1.0, 0.025)]),
}

CATALOG_NAMES: tuple[str, ...] = tuple(_SHAPES)


def catalog_terrain(
    name: str, length: float = DEFAULT_SOLE_LENGTH, tip: float = DEFAULT_TIP
) -> TerrainProfile:
    """One catalog shape scaled to a sole of `length`.

    Raises:
        KeyError: for an unknown name.
    """
    kind, points = _SHAPES[name]
    return TerrainProfile.from_points(
        name,
        kind,
        [fraction * length for fraction, _ in points],
        [height for _, height in points],
        tip,
    )


def terrain_catalog(
    length: float = DEFAULT_SOLE_LENGTH, tip: float = DEFAULT_TIP
) -> tuple[TerrainProfile, ...]:
    """The eight default terrains, flat first."""
    return tuple(catalog_terrain(name, length, tip) for name in CATALOG_NAMES)
