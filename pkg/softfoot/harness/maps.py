"""Compliance maps over (ē, e₀) grids and the loaded-shape gallery."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok
from softfoot.statics.compliance import ComplianceMethod, DerivativeMode, compliance_to_compression
from softfoot.statics.compression import (
    compression_fraction,
    compression_width,
    nonlinear_compression,
    with_uniform_stiffness,
)
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.errors import StaticsError
from softfoot.statics.newton import NewtonOptions
from softfoot.statics.params import GRAVITY, EquilibriumState, FootLoad, SoftFootParams
from softfoot.statics.shape import FootShape, foot_shape

__all__ = [
    "ComplianceMap",
    "compliance_map",
    "GalleryEntry",
    "Gallery",
    "configuration_gallery",
]

# relative slack when checking monotone sequences
_MONOTONE_RTOL = 1e-9


def _non_increasing(values: FloatArray) -> bool:
    finite = values[np.isfinite(values)]
    if finite.size < 2:
        return True
    slack = _MONOTONE_RTOL * float(np.max(np.abs(finite)))
    return bool(np.all(np.diff(finite) <= slack))


def _positive_grid(name: str, values: Sequence[float] | FloatArray) -> FloatArray:
    grid = np.asarray(values, dtype=np.float64).reshape(-1)
    if grid.size == 0:
        raise ValueError(f"{name} grid is empty")
    if not np.all(np.isfinite(grid) & (grid > 0.0)):
        raise ValueError(f"{name} grid values must be > 0")
    return grid


@dataclass(frozen=True, slots=True, eq=False)
class ComplianceMap:
    """Compliance [m/N] on the grid, indexed values[load, e_bar, e0].

    Failed cells hold NaN and one diagnostic each.
    """

    e_bars: FloatArray
    e0s: FloatArray
    loads_kg: FloatArray
    values: FloatArray
    diagnostics: tuple[str, ...] = ()

    def rows(self) -> Iterator[tuple[float, float, float, float]]:
        """(e_bar, e0, load_kg, compliance), loads outermost."""
        for k, load in enumerate(self.loads_kg):
            for i, e_bar in enumerate(self.e_bars):
                for j, e0 in enumerate(self.e0s):
                    yield float(e_bar), float(e0), float(load), float(self.values[k, i, j])

    def non_increasing_in_e_bar(self) -> bool:
        """True when every (load, e0) column of |compliance| is non-increasing in ē.

        The sign follows the side of q = 0 the foot rests on: a pretensioned
        foot at 0 kg has negative compliance.
        """
        order = np.argsort(self.e_bars)
        magnitudes = np.abs(self.values)
        return all(
            _non_increasing(magnitudes[k, order, j])
            for k in range(self.loads_kg.size)
            for j in range(self.e0s.size)
        )


def compliance_map(
    template: SoftFootParams,
    e_bars: Sequence[float] | FloatArray,
    e0s: Sequence[float] | FloatArray,
    loads_kg: Sequence[float] | FloatArray = (0.0, 1.5),
    *,
    method: ComplianceMethod = "closed-form",
    derivative: DerivativeMode = "analytic",
    options: NewtonOptions | None = None,
    workers: int = 1,
) -> ComplianceMap:
    """compliance_to_compression on the Cartesian grid ē × e₀ for every load.

    Raises:
        ValueError: on empty or non-positive stiffness grids or negative loads.
    """
    bars = _positive_grid("e_bar", e_bars)
    zeros = _positive_grid("e0", e0s)
    loads = np.asarray(loads_kg, dtype=np.float64).reshape(-1)
    if loads.size == 0 or not np.all(np.isfinite(loads) & (loads >= 0.0)):
        raise ValueError("loads must be a nonempty list of masses ≥ 0 kg")

    cells = [
        (k, i, j) for k in range(loads.size) for i in range(bars.size) for j in range(zeros.size)
    ]

    def evaluate(cell: tuple[int, int, int]) -> float | StaticsError:
        k, i, j = cell
        params = with_uniform_stiffness(template, float(bars[i]), float(zeros[j]))
        result = compliance_to_compression(
            params,
            FootLoad.from_mass(float(loads[k]), GRAVITY),
            method=method,
            derivative=derivative,
            options=options,
        )
        return result.error if isinstance(result, Err) else result.value

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(evaluate, cells))
    else:
        outcomes = [evaluate(cell) for cell in cells]

    values = np.full((loads.size, bars.size, zeros.size), np.nan)
    diagnostics: list[str] = []
    for (k, i, j), outcome in zip(cells, outcomes, strict=True):
        if isinstance(outcome, StaticsError):
            diagnostics.append(
                f"e_bar={bars[i]!r} e0={zeros[j]!r} load={loads[k]!r} kg: {outcome.message}"
            )
        else:
            values[k, i, j] = outcome
    return ComplianceMap(
        e_bars=bars, e0s=zeros, loads_kg=loads, values=values, diagnostics=tuple(diagnostics)
    )


@dataclass(frozen=True, slots=True, eq=False)
class GalleryEntry:
    """Solved shape under one load.

    Attributes:
        load_kg: mass on the ankle.
        state: solved equilibrium, None when the solve failed.
        shape: sole and arch polylines of `state`.
        compression: exact load-point descent from the solved 0 kg state [m].
        compression_fraction: closed-form compression over the full width, the
            measure the stiffness is calibrated on.
        exact_fraction: `compression` over the full width.
        arch_height: arch apex height b·sin β̄ minus the compression [m].
        endpoint_drop: sole tip height above the mid contact [m].
        error: solver failure, if any.
    """

    load_kg: float
    state: EquilibriumState | None
    shape: FootShape | None
    compression: float
    compression_fraction: float
    exact_fraction: float
    arch_height: float
    endpoint_drop: float
    error: StaticsError | None = None


@dataclass(frozen=True, slots=True, eq=False)
class Gallery:
    entries: tuple[GalleryEntry, ...]
    width: float

    @property
    def failures(self) -> tuple[GalleryEntry, ...]:
        return tuple(entry for entry in self.entries if entry.error is not None)

    @property
    def compression_monotone(self) -> bool:
        """Compression never decreases along the ascending load sequence."""
        values = np.array([-entry.compression for entry in self.entries])
        return _non_increasing(values)

    @property
    def arch_height_non_increasing(self) -> bool:
        return _non_increasing(np.array([entry.arch_height for entry in self.entries]))


def configuration_gallery(
    params: SoftFootParams,
    loads_kg: Sequence[float],
    options: NewtonOptions | None = None,
) -> Gallery:
    """Equilibrium shapes for an ascending load sequence.

    Each solve starts from the previous load's state. Exact compression is
    measured from the solved 0 kg state, so a pretensioned foot starts at zero.
    A failed load is kept as an entry with its error and NaN measures.

    Raises:
        ValueError: if loads are negative or not ascending.
    """
    loads = [float(m) for m in loads_kg]
    if any(m < 0.0 or not math.isfinite(m) for m in loads):
        raise ValueError("gallery loads must be ≥ 0 kg")
    if any(b < a for a, b in zip(loads, loads[1:], strict=False)):
        raise ValueError("gallery loads must be ascending")

    apex = params.arch_b * math.sin(params.beta_bar)
    width = compression_width(params)
    full = width.value if not isinstance(width, Err) else math.nan
    rest = solve_equilibrium(params, FootLoad(0.0), options=options)
    reference = nonlinear_compression(params, rest.value.q) if isinstance(rest, Ok) else math.nan

    entries: list[GalleryEntry] = []
    previous: EquilibriumState | None = None
    for mass in loads:
        load = FootLoad.from_mass(mass, GRAVITY)
        solved = solve_equilibrium(params, load, previous, options)
        if isinstance(solved, Err):
            entries.append(
                GalleryEntry(
                    load_kg=mass,
                    state=None,
                    shape=None,
                    compression=math.nan,
                    compression_fraction=math.nan,
                    exact_fraction=math.nan,
                    arch_height=math.nan,
                    endpoint_drop=math.nan,
                    error=solved.error,
                )
            )
            continue
        state = solved.value
        previous = state
        shape = foot_shape(params, state.q)
        descent = nonlinear_compression(params, state.q) - reference
        closed = compression_fraction(params, load)
        entries.append(
            GalleryEntry(
                load_kg=mass,
                state=state,
                shape=shape,
                compression=descent,
                compression_fraction=closed.value if isinstance(closed, Ok) else math.nan,
                exact_fraction=descent / full,
                arch_height=apex - descent,
                endpoint_drop=shape.endpoint_drop,
            )
        )
    return Gallery(entries=tuple(entries), width=full)
