"""Typed run configuration loading and validation.

A run config is a TOML (`.toml`) or JSON (`.json`) document with
`schema = 1`. Omitted fields take the nominal defaults; every resolved field
is recorded as a `ProvenanceEntry` naming where its value came from.

Keys starting with `_` are annotations and ignored at any depth. Any other
unknown key is an error naming the dotted key.
"""

from __future__ import annotations

import json
import math
import tomllib
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Literal, TypeVar

from softfoot.core.result import Err, Ok, Result
from softfoot.core.structured import (
    StrDict,
    as_float,
    as_int,
    as_obj_list,
    as_str_dict,
    is_annotation,
)
from softfoot.core.units import LengthUnit, UnitError, is_length_unit, parse_angle, parse_length
from softfoot.harness.sweep import FootModel
from softfoot.harness.terrain import CATALOG_NAMES, DEFAULT_SOLE_LENGTH, DEFAULT_TIP
from softfoot.planar.adaptive import AdaptiveArchParams
from softfoot.planar.compliant import CompliantLumpedParams, StabilityConvention
from softfoot.planar.rigid import RigidFootScenario
from softfoot.statics.compliance import ComplianceMethod, DerivativeMode
from softfoot.statics.compression import calibrate_stiffness
from softfoot.statics.errors import StaticsError
from softfoot.statics.newton import JacobianMode, NewtonOptions
from softfoot.statics.nominal import NOMINAL_LOAD_KG, TARGET_FRACTION, TARGET_MASS_KG
from softfoot.statics.params import GRAVITY, FootLoad, SoftFootParams

__all__ = [
    "CONFIG_SCHEMA",
    "ConfigError",
    "ProvenanceSource",
    "ProvenanceEntry",
    "SweepConfig",
    "MapConfig",
    "PlanarScenario",
    "PlanarConfig",
    "RunConfig",
    "parse_config",
    "parse_override",
]

CONFIG_SCHEMA = 1

FOOT_MODELS: tuple[FootModel, ...] = ("rigid", "compliant", "softfoot")
COMPLIANCE_METHODS: tuple[ComplianceMethod, ...] = ("closed-form", "nonlinear")
DERIVATIVE_MODES: tuple[DerivativeMode, ...] = ("analytic", "finite-difference")
JACOBIAN_MODES: tuple[JacobianMode, ...] = ("finite-difference", "analytic")
CONVENTIONS: tuple[StabilityConvention, ...] = ("dimensional-correction", "as-written")

DEFAULT_GALLERY_LOADS_KG = (0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0)
DEFAULT_MAP_LOADS_KG = (0.0, NOMINAL_LOAD_KG)

ProvenanceSource = Literal["default", "file", "override", "calibrated"]

C = TypeVar("C", bound=str)


@dataclass(frozen=True, slots=True)
class ConfigError:
    """Error when a run config cannot be loaded or validated."""

    message: str
    path: Path | None = None
    key: str | None = None


@dataclass(frozen=True, slots=True)
class ProvenanceEntry:
    key: str
    value: str
    source: ProvenanceSource


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """Tilt sweeps over the terrain catalog (lengths in metres, angles in radians)."""

    feet: tuple[FootModel, ...] = FOOT_MODELS
    terrains: tuple[str, ...] = CATALOG_NAMES
    sole_length: float = DEFAULT_SOLE_LENGTH
    tip: float = DEFAULT_TIP
    ankle_limit: float = 0.349
    step: float = 0.001
    compliant_stiffness: float = 1000.0
    leg_height: float = 1.0
    load_arm_start: float = 0.02
    load_arm_stop: float = 0.11
    workers: int = 1
    refine: bool = True


@dataclass(frozen=True, slots=True)
class MapConfig:
    """Geometric (ē, e₀) grid of the compliance map [N·m/rad]."""

    e_bar_min: float
    e_bar_max: float
    e0_min: float
    e0_max: float
    points: int = 20
    loads_kg: tuple[float, ...] = DEFAULT_MAP_LOADS_KG
    method: ComplianceMethod = "closed-form"
    derivative: DerivativeMode = "analytic"
    workers: int = 1


@dataclass(frozen=True, slots=True)
class PlanarScenario:
    """One obstacle/stiffness/arch case evaluated by planar-compare."""

    name: str
    obstacle_position: float
    obstacle_height: float
    stiffness: float
    com_offset: float
    com_position: float
    alpha1: float
    alpha2: float
    alpha_h: float


@dataclass(frozen=True, slots=True)
class PlanarConfig:
    sole_length: float
    leg_height: float
    ankle_limit: float
    load: float
    mass: float
    convention: StabilityConvention
    scenarios: tuple[PlanarScenario, ...]


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Fully validated run configuration, SI units."""

    units: LengthUnit
    seed: int | None
    params: SoftFootParams
    e_bar: float
    load_kg: float
    gravity: float
    solver: NewtonOptions
    sweep: SweepConfig
    map: MapConfig
    gallery_loads_kg: tuple[float, ...]
    planar: PlanarConfig
    source: Path | None = None
    provenance: tuple[ProvenanceEntry, ...] = field(default=())

    @property
    def load(self) -> FootLoad:
        return FootLoad.from_mass(self.load_kg, self.gravity)


# -----------------------------------------------------------------------------
# Section reader
# -----------------------------------------------------------------------------


class _Invalid(Exception):
    def __init__(self, key: str, message: str) -> None:
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message


Bound = Literal["any", "positive", "nonnegative"]


def _check_bound(name: str, value: float, bound: Bound) -> str | None:
    if bound == "positive" and not value > 0.0:
        return f"{name} > 0 (got {value!r})"
    if bound == "nonnegative" and not value >= 0.0:
        return f"{name} ≥ 0 (got {value!r})"
    return None


def _show(value: object) -> str:
    if isinstance(value, tuple):
        items: tuple[object, ...] = value  # pyright: ignore[reportUnknownVariableType]
        return "[" + ", ".join(_show(item) for item in items) + "]"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class _Context:
    units: LengthUnit
    overridden: frozenset[str]
    provenance: list[ProvenanceEntry]


class _Section:
    """Typed reads from one config table, recording the source of every value."""

    def __init__(self, name: str, data: StrDict, ctx: _Context) -> None:
        self.name = name
        self._data = data
        self._ctx = ctx
        self._seen: set[str] = set()

    def dotted(self, key: str) -> str:
        return f"{self.name}.{key}" if self.name else key

    def present(self, key: str) -> bool:
        return key in self._data

    def _raw(self, key: str) -> object | None:
        self._seen.add(key)
        return self._data.get(key)

    def record(self, key: str, value: object, source: ProvenanceSource | None = None) -> None:
        dotted = self.dotted(key)
        if source is None:
            if not self.present(key):
                source = "default"
            else:
                source = "override" if dotted in self._ctx.overridden else "file"
        self._ctx.provenance.append(ProvenanceEntry(dotted, _show(value), source))

    def invalid(self, key: str, message: str) -> _Invalid:
        return _Invalid(self.dotted(key), message)

    def _convert(self, key: str, raw: object, convert: str) -> float:
        try:
            match convert:
                case "length":
                    return parse_length(raw, self._ctx.units)
                case "angle":
                    return parse_angle(raw)
                case _:
                    number = as_float(raw)
                    if number is None:
                        raise UnitError(f"expected a number, got {raw!r}")
                    return number
        except UnitError as e:
            raise self.invalid(key, str(e)) from None

    def _optional(self, key: str, convert: str, bound: Bound) -> float | None:
        raw = self._raw(key)
        if raw is None:
            return None
        value = self._convert(key, raw, convert)
        problem = _check_bound(key, value, bound)
        if problem is not None:
            raise self.invalid(key, problem)
        return value

    def number(self, key: str, default: float, bound: Bound = "any") -> float:
        value = self._optional(key, "number", bound)
        value = default if value is None else value
        self.record(key, value)
        return value

    def length(self, key: str, default: float, bound: Bound = "any") -> float:
        value = self._optional(key, "length", bound)
        value = default if value is None else value
        self.record(key, value)
        return value

    def angle(self, key: str, default: float, bound: Bound = "any") -> float:
        value = self._optional(key, "angle", bound)
        value = default if value is None else value
        self.record(key, value)
        return value

    def optional_number(self, key: str, bound: Bound = "any") -> float | None:
        return self._optional(key, "number", bound)

    def optional_length(self, key: str, bound: Bound = "any") -> float | None:
        return self._optional(key, "length", bound)

    def integer(self, key: str, default: int, minimum: int) -> int:
        raw = self._raw(key)
        value = default if raw is None else as_int(raw)
        if value is None:
            raise self.invalid(key, f"expected an integer, got {raw!r}")
        if value < minimum:
            raise self.invalid(key, f"{key} ≥ {minimum} (got {value})")
        self.record(key, value)
        return value

    def boolean(self, key: str, default: bool) -> bool:
        raw = self._raw(key)
        if raw is None:
            value = default
        elif isinstance(raw, bool):
            value = raw
        else:
            raise self.invalid(key, f"expected true or false, got {raw!r}")
        self.record(key, value)
        return value

    def text(self, key: str, default: str) -> str:
        raw = self._raw(key)
        if raw is None:
            value = default
        elif isinstance(raw, str) and raw.strip():
            value = raw.strip()
        else:
            raise self.invalid(key, f"expected a non-empty string, got {raw!r}")
        self.record(key, value)
        return value

    def choice(self, key: str, default: C, options: tuple[C, ...]) -> C:
        raw = self._raw(key)
        value = default if raw is None else _pick(raw, options)
        if value is None:
            raise self.invalid(key, f"expected one of {', '.join(options)}, got {raw!r}")
        self.record(key, value)
        return value

    def _list(self, key: str) -> list[object] | None:
        raw = self._raw(key)
        if raw is None:
            return None
        items = as_obj_list(raw)
        if items is None:
            raise self.invalid(key, f"expected a list, got {raw!r}")
        return items

    def choices(self, key: str, default: tuple[C, ...], options: tuple[C, ...]) -> tuple[C, ...]:
        items = self._list(key)
        if items is None:
            self.record(key, default)
            return default
        picked: list[C] = []
        for item in items:
            value = _pick(item, options)
            if value is None:
                raise self.invalid(key, f"expected items from {', '.join(options)}, got {item!r}")
            picked.append(value)
        if not picked:
            raise self.invalid(key, "list must not be empty")
        self.record(key, tuple(picked))
        return tuple(picked)

    def numbers(
        self, key: str, default: tuple[float, ...], bound: Bound = "any"
    ) -> tuple[float, ...]:
        items = self._list(key)
        if items is None:
            self.record(key, default)
            return default
        values: list[float] = []
        for item in items:
            value = as_float(item)
            if value is None:
                raise self.invalid(key, f"expected numbers, got {item!r}")
            problem = _check_bound(key, value, bound)
            if problem is not None:
                raise self.invalid(key, problem)
            values.append(value)
        if not values:
            raise self.invalid(key, "list must not be empty")
        self.record(key, tuple(values))
        return tuple(values)

    def table(self, key: str) -> _Section:
        raw = self._raw(key)
        if raw is None:
            return _Section(self.dotted(key), {}, self._ctx)
        data = as_str_dict(raw)
        if data is None:
            raise self.invalid(key, "expected a table")
        return _Section(self.dotted(key), data, self._ctx)

    def empty(self, key: str) -> _Section:
        return _Section(self.dotted(key), {}, self._ctx)

    def tables(self, key: str) -> list[_Section]:
        items = self._list(key)
        if items is None:
            return []
        sections: list[_Section] = []
        for index, item in enumerate(items):
            data = as_str_dict(item)
            if data is None:
                raise _Invalid(f"{self.dotted(key)}[{index}]", "expected a table")
            sections.append(_Section(f"{self.dotted(key)}[{index}]", data, self._ctx))
        return sections

    def finish(self) -> None:
        for key in sorted(set(self._data) - self._seen):
            raise self.invalid(key, "unknown key")


def _pick(raw: object, options: tuple[C, ...]) -> C | None:
    for option in options:
        if raw == option:
            return option
    return None


# -----------------------------------------------------------------------------
# Loading and overrides
# -----------------------------------------------------------------------------


def _strip_annotations(obj: object) -> object:
    data = as_str_dict(obj)
    if data is not None:
        return {k: _strip_annotations(v) for k, v in data.items() if not is_annotation(k)}
    items = as_obj_list(obj)
    if items is not None:
        return [_strip_annotations(item) for item in items]
    return obj


def _read_document(path: Path) -> Result[StrDict, ConfigError]:
    """Parse a TOML or JSON config file into its root table."""
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return Err(ConfigError(f"config file not found: {path}", path=path))
    except OSError as e:
        return Err(ConfigError(f"error reading config: {e}", path=path))

    obj: object
    if path.suffix.lower() == ".json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            return Err(ConfigError(f"invalid JSON syntax: {e}", path=path))
    else:
        try:
            obj = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            return Err(ConfigError(f"invalid TOML syntax: {e}", path=path))

    data = as_str_dict(obj)
    if data is None:
        return Err(ConfigError("config root must be a table", path=path))
    return Ok(data)


def parse_override(item: str) -> tuple[tuple[str, ...], object]:
    """Split `section.key=value`; the value is read as a TOML literal, else kept as text.

    Raises:
        ValueError: if the item has no `=` or an empty key.
    """
    key, sep, text = item.partition("=")
    parts = tuple(part.strip() for part in key.split("."))
    if not sep or not all(parts):
        raise ValueError(f"invalid --set '{item}' (expected section.key=value)")
    try:
        value: object = tomllib.loads(f"value = {text.strip()}")["value"]
    except tomllib.TOMLDecodeError:
        value = text.strip()
    return parts, value


def _apply_overrides(data: StrDict, overrides: Sequence[str]) -> frozenset[str]:
    applied: set[str] = set()
    for item in overrides:
        parts, value = parse_override(item)
        table = data
        for depth, part in enumerate(parts[:-1]):
            nested = table.setdefault(part, {})
            child = as_str_dict(nested)
            if child is None:
                raise _Invalid(".".join(parts[: depth + 1]), "cannot override inside a value")
            table = child
        table[parts[-1]] = value
        applied.add(".".join(parts))
    return frozenset(applied)


# -----------------------------------------------------------------------------
# Sections
# -----------------------------------------------------------------------------


@lru_cache(maxsize=16)
def _calibrated_e_bar(
    template: SoftFootParams, load: FootLoad, e0: float | None
) -> Result[float, StaticsError]:
    return calibrate_stiffness(template, load, TARGET_FRACTION, e0=e0)


def _soft_foot(section: _Section, load: FootLoad) -> tuple[SoftFootParams, float]:
    n = section.integer("n", 6, minimum=1)
    link_length = section.length("link_length", 0.02, "positive")
    arch_a = section.length("arch_a", 0.04, "positive")
    arch_b = section.length("arch_b", 0.08, "positive")
    alpha_bar = section.angle("alpha_bar", math.pi / 6)
    beta_bar = section.angle("beta_bar", math.pi / 3)
    pulley_radius = section.length("pulley_radius", 0.0015, "positive")
    sigma = section.length("sigma", 0.0)
    delta = section.length("delta", 0.0)
    beta_pre = section.angle("beta_pre", beta_bar)
    load_arm = section.optional_length("load_arm")
    section.record("load_arm", arch_b if load_arm is None else load_arm)
    e0 = section.optional_number("e0", "positive")
    e_bar = section.optional_number("e_bar", "positive")
    section.finish()

    def build(stiffness: float) -> SoftFootParams:
        return SoftFootParams.uniform(
            e_bar=stiffness,
            n=n,
            link_length=link_length,
            arch_a=arch_a,
            arch_b=arch_b,
            alpha_bar=alpha_bar,
            beta_bar=beta_bar,
            e0=e0,
            pulley_radius=pulley_radius,
            sigma=sigma,
            delta=delta,
            beta_pre=beta_pre,
            load_arm=load_arm,
        )

    try:
        template = build(1.0 if e_bar is None else e_bar)
    except ValueError as e:
        raise _Invalid(section.name, str(e)) from None

    if e_bar is not None:
        section.record("e_bar", e_bar)
    else:
        calibrated = _calibrated_e_bar(template, load, e0)
        if isinstance(calibrated, Err):
            raise section.invalid("e_bar", f"calibration failed: {calibrated.error.message}")
        e_bar = calibrated.value
        template = build(e_bar)
        section.record("e_bar", e_bar, "calibrated")
    section.record("e0", template.e0, None if e0 is not None else "default")
    return template, e_bar


def _solver(section: _Section) -> NewtonOptions:
    tol = section.optional_number("tol", "positive")
    section.record("tol", "auto" if tol is None else tol)
    options = NewtonOptions(
        tol=tol,
        max_iter=section.integer("max_iter", 100, minimum=1),
        min_step=section.number("min_step", 2.0**-20, "positive"),
        fd_step=section.number("fd_step", 1e-7, "positive"),
        jacobian=section.choice("jacobian", "finite-difference", JACOBIAN_MODES),
    )
    section.finish()
    return options


def _sweep(section: _Section) -> SweepConfig:
    feet = section.choices("feet", FOOT_MODELS, FOOT_MODELS)
    terrains = section.choices("terrains", CATALOG_NAMES, CATALOG_NAMES)
    sole_length = section.length("sole_length", DEFAULT_SOLE_LENGTH, "positive")
    tip = section.length("tip", DEFAULT_TIP, "positive")
    ankle_limit = section.angle("ankle_limit", 0.349, "positive")
    step = section.length("step", 0.001, "positive")
    compliant_stiffness = section.number("compliant_stiffness", 1000.0, "positive")
    leg_height = section.length("leg_height", 1.0, "positive")
    start = section.length("load_arm_start", 0.02, "positive")
    stop = section.length("load_arm_stop", 0.11, "positive")
    workers = section.integer("workers", 1, minimum=1)
    refine = section.boolean("refine", True)
    section.finish()
    if stop < start:
        raise section.invalid("load_arm_stop", f"load_arm_stop ≥ load_arm_start (got {stop!r})")
    return SweepConfig(
        feet=feet,
        terrains=terrains,
        sole_length=sole_length,
        tip=tip,
        ankle_limit=ankle_limit,
        step=step,
        compliant_stiffness=compliant_stiffness,
        leg_height=leg_height,
        load_arm_start=start,
        load_arm_stop=stop,
        workers=workers,
        refine=refine,
    )


def _map(section: _Section, e_bar: float) -> MapConfig:
    bounds: dict[str, float] = {}
    for key, factor in (("e_bar_min", 0.25), ("e_bar_max", 4.0), ("e0_min", 0.25), ("e0_max", 4.0)):
        bounds[key] = section.number(key, factor * e_bar, "positive")
    for low, high in (("e_bar_min", "e_bar_max"), ("e0_min", "e0_max")):
        if not bounds[high] > bounds[low]:
            raise section.invalid(high, f"{high} > {low} (got {bounds[high]!r})")
    result = MapConfig(
        e_bar_min=bounds["e_bar_min"],
        e_bar_max=bounds["e_bar_max"],
        e0_min=bounds["e0_min"],
        e0_max=bounds["e0_max"],
        points=section.integer("points", 20, minimum=2),
        loads_kg=section.numbers("loads_kg", DEFAULT_MAP_LOADS_KG, "nonnegative"),
        method=section.choice("method", "closed-form", COMPLIANCE_METHODS),
        derivative=section.choice("derivative", "analytic", DERIVATIVE_MODES),
        workers=section.integer("workers", 1, minimum=1),
    )
    section.finish()
    return result


def _gallery(section: _Section) -> tuple[float, ...]:
    loads = section.numbers("loads_kg", DEFAULT_GALLERY_LOADS_KG, "nonnegative")
    section.finish()
    if any(b < a for a, b in zip(loads, loads[1:], strict=False)):
        raise section.invalid("loads_kg", "loads must be ascending")
    return loads


def _scenario(section: _Section, name: str, base: PlanarConfig) -> PlanarScenario:
    length = base.sole_length
    scenario = PlanarScenario(
        name=section.text("name", name),
        obstacle_position=section.length("obstacle_position", length / 2.0, "nonnegative"),
        obstacle_height=section.length("obstacle_height", 0.01, "nonnegative"),
        stiffness=section.number("stiffness", 250.0, "positive"),
        com_offset=section.length("com_offset", length / 4.0),
        com_position=section.length("com_position", length / 2.0, "nonnegative"),
        alpha1=section.angle("alpha1", 0.3, "positive"),
        alpha2=section.angle("alpha2", 1.0, "positive"),
        alpha_h=section.angle("alpha_h", 1.0, "positive"),
    )
    section.finish()
    try:
        RigidFootScenario(
            sole_length=length,
            leg_height=base.leg_height,
            obstacle_position=scenario.obstacle_position,
            obstacle_height=scenario.obstacle_height,
            ankle_limit=base.ankle_limit,
        )
        CompliantLumpedParams(
            spring_stiffness=scenario.stiffness,
            sole_length=length,
            load=base.load,
            mass=base.mass,
            leg_height=base.leg_height,
        )
        AdaptiveArchParams(
            sole_length=length,
            load=base.load,
            com_position=scenario.com_position,
            alpha1=scenario.alpha1,
            alpha2=scenario.alpha2,
            alpha_h=scenario.alpha_h,
        )
    except ValueError as e:
        raise _Invalid(section.name, str(e)) from None
    if abs(scenario.com_offset) > length / 2.0:
        raise section.invalid("com_offset", f"|com_offset| ≤ L/2 (got {scenario.com_offset!r})")
    return scenario


def _planar(section: _Section) -> PlanarConfig:
    base = PlanarConfig(
        sole_length=section.length("sole_length", 0.2, "positive"),
        leg_height=section.length("leg_height", 1.0, "positive"),
        ankle_limit=section.angle("ankle_limit", 0.3, "positive"),
        load=section.number("load", 15.0, "positive"),
        mass=section.number("mass", 50.0, "positive"),
        convention=section.choice("convention", "dimensional-correction", CONVENTIONS),
        scenarios=(),
    )
    tables = section.tables("scenarios")
    if not tables:
        scenarios = (_scenario(section.empty("scenarios"), "default", base),)
    else:
        scenarios = tuple(
            _scenario(table, f"scenario-{index}", base) for index, table in enumerate(tables)
        )
    section.finish()
    names = [s.name for s in scenarios]
    if len(set(names)) != len(names):
        raise section.invalid("scenarios", "scenario names must be unique")
    return PlanarConfig(
        sole_length=base.sole_length,
        leg_height=base.leg_height,
        ankle_limit=base.ankle_limit,
        load=base.load,
        mass=base.mass,
        convention=base.convention,
        scenarios=scenarios,
    )


# -----------------------------------------------------------------------------
# Entry point
# -----------------------------------------------------------------------------


def _resolve_units(data: StrDict, cli_units: LengthUnit | None) -> LengthUnit:
    declared = data.pop("units", None)
    if declared is None:
        return cli_units or "m"
    if not is_length_unit(declared):
        raise _Invalid("units", f"expected mm or m, got {declared!r}")
    if cli_units is not None and cli_units != declared:
        raise _Invalid("units", f"unit mismatch: config declares {declared}, --units {cli_units}")
    return declared


def _resolve(
    data: StrDict,
    *,
    has_file: bool,
    units: LengthUnit | None,
    overridden: frozenset[str],
    seed: int | None,
) -> tuple[RunConfig, tuple[ProvenanceEntry, ...]]:
    schema = data.pop("schema", None)
    if has_file or schema is not None:
        if schema is None:
            raise _Invalid("schema", f"missing (expected {CONFIG_SCHEMA})")
        if as_int(schema) != CONFIG_SCHEMA:
            raise _Invalid("schema", f"unsupported version {schema!r} (expected {CONFIG_SCHEMA})")

    unit_present = "units" in data
    resolved_units = _resolve_units(data, units)
    ctx = _Context(units=resolved_units, overridden=overridden, provenance=[])
    root = _Section("", data, ctx)
    root.record("units", resolved_units, None if unit_present else "default")

    file_seed = root.optional_number("seed", "nonnegative")
    if seed is not None:
        root.record("seed", seed, "override")
    elif file_seed is not None:
        if file_seed != int(file_seed):
            raise _Invalid("seed", f"expected an integer, got {file_seed!r}")
        seed = int(file_seed)
        root.record("seed", seed)

    load_section = root.table("load")
    load_kg = load_section.number("mass_kg", NOMINAL_LOAD_KG, "nonnegative")
    gravity = load_section.number("gravity", GRAVITY, "positive")
    load_section.finish()

    params, e_bar = _soft_foot(root.table("foot"), FootLoad.from_mass(TARGET_MASS_KG, gravity))
    solver = _solver(root.table("solver"))
    sweep = _sweep(root.table("sweep"))
    compliance = _map(root.table("map"), e_bar)
    gallery = _gallery(root.table("gallery"))
    planar = _planar(root.table("planar"))
    root.finish()

    config = RunConfig(
        units=resolved_units,
        seed=seed,
        params=params,
        e_bar=e_bar,
        load_kg=load_kg,
        gravity=gravity,
        solver=solver,
        sweep=sweep,
        map=compliance,
        gallery_loads_kg=gallery,
        planar=planar,
    )
    return config, tuple(ctx.provenance)


def parse_config(
    path: Path | None = None,
    *,
    units: LengthUnit | None = None,
    overrides: Sequence[str] = (),
    seed: int | None = None,
) -> Result[RunConfig, ConfigError]:
    """Load, override and validate a run config.

    Args:
        path: TOML or JSON file; None means all defaults.
        units: length units used when the file declares none.
        overrides: `section.key=value` items applied before validation.
        seed: seed for randomized checks; wins over the file's `seed`.

    Returns:
        Ok(RunConfig) with its provenance log, or Err(ConfigError) naming the key.
    """
    data: StrDict = {}
    if path is not None:
        loaded = _read_document(path)
        if isinstance(loaded, Err):
            return loaded
        data = loaded.value

    stripped = as_str_dict(_strip_annotations(data)) or {}
    try:
        overridden = _apply_overrides(stripped, overrides)
        config, provenance = _resolve(
            stripped, has_file=path is not None, units=units, overridden=overridden, seed=seed
        )
    except _Invalid as e:
        return Err(ConfigError(str(e), path=path, key=e.key))
    except ValueError as e:
        return Err(ConfigError(str(e), path=path))

    return Ok(
        RunConfig(
            units=config.units,
            seed=config.seed,
            params=config.params,
            e_bar=config.e_bar,
            load_kg=config.load_kg,
            gravity=config.gravity,
            solver=config.solver,
            sweep=config.sweep,
            map=config.map,
            gallery_loads_kg=config.gallery_loads_kg,
            planar=config.planar,
            source=path,
            provenance=provenance,
        )
    )
