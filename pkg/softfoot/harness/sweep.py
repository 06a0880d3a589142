"""Quasi-static sweeps of the ankle or COM position over a terrain.

Every sweep point is an independent static solve, so points may run on a
thread pool; rows always come back in sweep order.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import ClassVar, Literal

import numpy as np

from softfoot.contact.hull import convex_hull, hull_margin, stability_test
from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok
from softfoot.harness.cop import cop_from_forces, zmp_of_contacts
from softfoot.harness.terrain import TerrainProfile
from softfoot.planar.compliant import CompliantLumpedParams, compliant_tilt_angle
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.linear import linear_state
from softfoot.statics.newton import NewtonOptions
from softfoot.statics.params import GRAVITY, FootLoad, SoftFootParams

__all__ = [
    "FootModel",
    "SweptParameter",
    "RigidFoot",
    "CompliantFoot",
    "SoftFoot",
    "Foot",
    "SweepSpec",
    "SweepRow",
    "SweepTable",
    "SweepEvaluator",
    "tilt_sweep",
    "sweep_margin",
    "rigid_resting_edges",
    "softfoot_placement",
    "softfoot_compensation",
]

FootModel = Literal["rigid", "compliant", "softfoot"]
SweptParameter = Literal["com_offset", "load_arm"]

_NAN = float("nan")


@dataclass(frozen=True, slots=True)
class RigidFoot:
    sole_length: float

    model: ClassVar[FootModel] = "rigid"

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sole_length) and self.sole_length > 0.0):
            raise ValueError(f"sole_length must be > 0 (got {self.sole_length})")


@dataclass(frozen=True, slots=True)
class CompliantFoot:
    """Flat sole on two springs of stiffness k [N/m] at ±L/2."""

    stiffness: float
    sole_length: float
    leg_height: float = 1.0

    model: ClassVar[FootModel] = "compliant"

    def lumped(self, load: float) -> CompliantLumpedParams:
        return CompliantLumpedParams(
            spring_stiffness=self.stiffness,
            sole_length=self.sole_length,
            load=load,
            mass=load / GRAVITY,
            leg_height=self.leg_height,
        )


@dataclass(frozen=True, slots=True)
class SoftFoot:
    params: SoftFootParams
    options: NewtonOptions | None = None

    model: ClassVar[FootModel] = "softfoot"


Foot = RigidFoot | CompliantFoot | SoftFoot


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """Grid of swept positions and the admissibility limits.

    Attributes:
        foot_model: model the sweep is meant for.
        start, stop: swept range [m]; COM offset from the heel for flat
            feet, ankle load arm x_H for the SoftFoot.
        step: grid spacing [m].
        ankle_limit: θ_max [rad].
        load: P [N].
        workers: thread count; 1 solves in the calling thread.
    """

    foot_model: FootModel
    start: float
    stop: float
    step: float
    ankle_limit: float
    load: float
    workers: int = 1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0.0):
            raise ValueError(f"step must be > 0 (got {self.step})")
        finite = math.isfinite(self.start) and math.isfinite(self.stop)
        if not (finite and self.stop >= self.start):
            raise ValueError(f"sweep range must be nonempty (got [{self.start}, {self.stop}])")
        if not (math.isfinite(self.load) and self.load > 0.0):
            raise ValueError(f"load must be > 0 (got {self.load})")
        if not (math.isfinite(self.ankle_limit) and self.ankle_limit > 0.0):
            raise ValueError(f"ankle_limit must be > 0 (got {self.ankle_limit})")
        if self.workers < 1:
            raise ValueError(f"workers must be ≥ 1 (got {self.workers})")

    @property
    def swept_parameter(self) -> SweptParameter:
        return "load_arm" if self.foot_model == "softfoot" else "com_offset"

    def values(self) -> FloatArray:
        """linspace(start, stop, round((stop − start)/step) + 1); endpoints exact."""
        count = int(round((self.stop - self.start) / self.step)) + 1
        return np.linspace(self.start, self.stop, count)


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One sweep point.

    `margin` is min(active contact forces, θ_max − |ankle|). `zmp` comes from
    the resultant wrench of the contacts and `zmp_margin` is its clearance
    inside the hull of the pressing contacts. The row is admissible exactly
    when the solve succeeded, the margin is ≥ 0 and the ZMP is in the hull.
    """

    swept_value: float
    cop: float
    ankle_compensation: float
    f1: float
    f2: float
    f3: float
    tension: float
    admissible: bool
    branch: str
    margin: float
    diagnostic: str | None = None
    zmp: float = _NAN
    zmp_margin: float = -math.inf
    zmp_inside: bool = False

    @property
    def forces(self) -> tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)


@dataclass(frozen=True, slots=True)
class SweepTable:
    foot_model: FootModel
    terrain: str
    spec: SweepSpec
    rows: tuple[SweepRow, ...]

    @property
    def failures(self) -> tuple[SweepRow, ...]:
        return tuple(row for row in self.rows if row.diagnostic is not None)


SweepEvaluator = Callable[[float], SweepRow]


def _zmp_check(contacts: Sequence[tuple[float, float]]) -> tuple[float, float, bool]:
    """(ZMP, clearance, inside) of the contacts against the hull of the pressing ones."""
    positions = [p for p, _ in contacts]
    loads = [f for _, f in contacts]
    zmp = zmp_of_contacts(loads, positions)
    value = _NAN if zmp is None else zmp
    hull = convex_hull([(p, 0.0) for p, f in contacts if f > 0.0])
    if isinstance(hull, Err):
        return value, -math.inf, False
    point = None if zmp is None else (zmp, 0.0)
    return value, hull_margin(point, hull.value), stability_test(point, hull.value)


def _row(
    x: float,
    spec: SweepSpec,
    *,
    contacts: Sequence[tuple[float, float]],
    compensation: float,
    forces: tuple[float, float, float],
    branch: str,
    tension: float = _NAN,
) -> SweepRow:
    """Row from the (position, force) contacts; all of them count as active."""
    cop = cop_from_forces([f for _, f in contacts], [p for p, _ in contacts])
    margin = min((*(f for _, f in contacts), spec.ankle_limit - abs(compensation)))
    zmp, zmp_margin, inside = _zmp_check(contacts)
    return SweepRow(
        swept_value=x,
        cop=cop.value if isinstance(cop, Ok) else _NAN,
        ankle_compensation=compensation,
        f1=forces[0],
        f2=forces[1],
        f3=forces[2],
        tension=tension,
        admissible=margin >= 0.0 and inside,
        branch=branch,
        margin=margin,
        zmp=zmp,
        zmp_margin=zmp_margin,
        zmp_inside=inside,
    )


def _failed_row(x: float, compensation: float, branch: str, diagnostic: str) -> SweepRow:
    return SweepRow(
        swept_value=x,
        cop=_NAN,
        ankle_compensation=compensation,
        f1=_NAN,
        f2=_NAN,
        f3=_NAN,
        tension=_NAN,
        admissible=False,
        branch=branch,
        margin=-math.inf,
        diagnostic=diagnostic,
    )


def rigid_resting_edges(
    terrain: TerrainProfile, sole_length: float
) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Edges of the upper convex hull of the terrain under the sole, heel to tip."""
    hull: list[tuple[float, float]] = []
    for point in terrain.breakpoints_within(0.0, sole_length):
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            cross = (ax - ox) * (point[1] - oy) - (ay - oy) * (point[0] - ox)
            if cross < 0.0:
                break
            hull.pop()
        hull.append(point)
    return list(zip(hull, hull[1:], strict=False))


def _rigid_branch(edge: tuple[tuple[float, float], tuple[float, float]], length: float) -> str:
    (ax, ay), (bx, by) = edge
    if ax == 0.0 and bx == length:
        return "flat" if ay == by else "full-sole"
    if ax == 0.0:
        return "heel-side"
    if bx == length:
        return "tip-side"
    return "interior"


def _rigid_row(foot: RigidFoot, spec: SweepSpec, terrain: TerrainProfile, x: float) -> SweepRow:
    length = foot.sole_length
    candidates = [
        edge for edge in rigid_resting_edges(terrain, length) if edge[0][0] <= x <= edge[1][0]
    ]
    if not candidates:
        return _failed_row(x, _NAN, "none", f"COM {x} m outside the sole [0, {length}] m")
    edge = min(candidates, key=lambda e: abs(math.atan2(e[1][1] - e[0][1], e[1][0] - e[0][0])))
    (ax, ay), (bx, by) = edge
    tilt = math.atan2(by - ay, bx - ax)

    span = bx - ax
    contacts = ((ax, spec.load * ((bx - x) / span)), (bx, spec.load * ((x - ax) / span)))
    forces = [0.0, 0.0, 0.0]
    for position, force in contacts:
        slot = 0 if position == 0.0 else 2 if position == length else 1
        forces[slot] += force
    return _row(
        x,
        spec,
        contacts=contacts,
        compensation=-tilt,
        forces=(forces[0], forces[1], forces[2]),
        branch=_rigid_branch(edge, length),
    )


def _compliant_row(
    foot: CompliantFoot, spec: SweepSpec, terrain: TerrainProfile, x: float
) -> SweepRow:
    length = foot.sole_length
    offset = x - length / 2.0
    slope = math.atan((terrain.height_at(length) - terrain.height_at(0.0)) / length)
    tilt = slope + compliant_tilt_angle(foot.lumped(spec.load), offset)
    # lever rule about the springs at 0 and L; P/2 ∓ P·x_c/L
    f1, f3 = spec.load * ((length - x) / length), spec.load * (x / length)
    return _row(
        x,
        spec,
        contacts=((0.0, f1), (length, f3)),
        compensation=-tilt,
        forces=(f1, 0.0, f3),
        branch="compliant",
    )


def softfoot_placement(params: SoftFootParams, terrain: TerrainProfile) -> tuple[float, float]:
    """(arch tilt, δ) of the foot with its arch resting on the heel and mid contact.

    δ is the terrain height at the sole tip contact seen in the tilted arch frame.
    """
    mid = params.mid_contact
    tilt = math.atan2(terrain.height_at(mid) - terrain.height_at(0.0), mid)
    delta = terrain.softfoot_delta * math.cos(tilt) - terrain.tip * math.sin(tilt)
    return tilt, delta


def softfoot_compensation(params: SoftFootParams, q: FloatArray, arch_tilt: float = 0.0) -> float:
    """Ankle rotation that levels the line from the heel to the chain tip contact [rad].

    The tip of the solved configuration `q` sits L·Σ sin θ_i above the heel
    and ℓ3(q) ahead of it in the arch frame, which is tilted by `arch_tilt`.
    """
    rise = params.link_length * float(np.sum(np.sin(np.cumsum(q))))
    return -(arch_tilt + math.atan2(rise, params.tip_contact(q)))


def _softfoot_row(foot: SoftFoot, spec: SweepSpec, terrain: TerrainProfile, x: float) -> SweepRow:
    tilt, delta = softfoot_placement(foot.params, terrain)
    try:
        params = replace(foot.params, load_arm=x, delta=delta)
    except ValueError as e:
        return _failed_row(x, _NAN, "softfoot", str(e))
    load = FootLoad(spec.load)

    guess = linear_state(params, load, "closed-form")
    initial = guess.value if isinstance(guess, Ok) else None
    solved = solve_equilibrium(params, load, initial, foot.options)
    if isinstance(solved, Err):
        return _failed_row(x, _NAN, "softfoot", solved.error.message)

    state = solved.value
    positions = (0.0, params.mid_contact, params.tip_contact(state.q))
    return _row(
        x,
        spec,
        contacts=tuple(zip(positions, state.forces, strict=True)),
        compensation=softfoot_compensation(params, state.q, tilt),
        forces=state.forces,
        branch="softfoot",
        tension=state.tension,
    )


def _evaluate(foot: Foot, spec: SweepSpec, terrain: TerrainProfile, x: float) -> SweepRow:
    match foot:
        case RigidFoot():
            return _rigid_row(foot, spec, terrain, x)
        case CompliantFoot():
            return _compliant_row(foot, spec, terrain, x)
        case SoftFoot():
            return _softfoot_row(foot, spec, terrain, x)


def _check(foot: Foot, spec: SweepSpec) -> None:
    if foot.model != spec.foot_model:
        raise ValueError(f"sweep spec is for a {spec.foot_model} foot, got {foot.model}")
    if isinstance(foot, RigidFoot | CompliantFoot) and (
        spec.start < 0.0 or spec.stop > foot.sole_length
    ):
        raise ValueError(
            f"COM sweep [{spec.start}, {spec.stop}] must lie on the sole [0, {foot.sole_length}]"
        )


def tilt_sweep(foot: Foot, spec: SweepSpec, terrain: TerrainProfile) -> SweepTable:
    """Solve the foot model at every grid point of `spec` on `terrain`.

    A failed solve yields an inadmissible row with a diagnostic; the sweep
    continues.

    Raises:
        ValueError: if `foot` does not match `spec.foot_model` or a flat-foot
            COM range leaves the sole.
    """
    _check(foot, spec)
    values = [float(x) for x in spec.values()]

    def evaluate(x: float) -> SweepRow:
        return _evaluate(foot, spec, terrain, x)

    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            rows = tuple(pool.map(evaluate, values))
    else:
        rows = tuple(evaluate(x) for x in values)
    return SweepTable(foot_model=spec.foot_model, terrain=terrain.name, spec=spec, rows=rows)


def sweep_margin(foot: Foot, spec: SweepSpec, terrain: TerrainProfile) -> SweepEvaluator:
    """Row of the model at an arbitrary swept value, for margin root finding."""
    _check(foot, spec)

    def evaluate_at(x: float) -> SweepRow:
        return _evaluate(foot, spec, terrain, x)

    return evaluate_at
