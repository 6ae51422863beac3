"""JSON scenario documents and figure presets."""
import json
import math
from dataclasses import dataclass, field, replace
from typing import Union

import numpy as np

from .config import (
    DEFAULT_TAIL_EPSILON,
    EwlState,
    Fock,
    PhysicalParams,
    PulseMode,
    PulseSchedule,
    Scenario,
    Thermal,
    validate,
)
from .errors import ConfigParseError, ModelError, UnknownAxis, UnknownPreset


@dataclass(frozen=True)
class TimeGrid:
    """``steps`` equally spaced points on ``[0, t_max]`` (both ends included)."""

    t_max: float
    steps: int

    def times(self, pulses):
        return np.linspace(0.0, self.t_max, self.steps)


@dataclass(frozen=True)
class StroboscopicGrid:
    """Cycle boundaries ``2 k T`` for ``k = 0..cycles``."""

    cycles: int

    def times(self, pulses):
        return np.array([2 * k * pulses.T for k in range(self.cycles + 1)])


Grid = Union[TimeGrid, StroboscopicGrid]


@dataclass(frozen=True)
class ScenarioConfig:
    params: PhysicalParams = field(default_factory=PhysicalParams)
    atoms: EwlState = field(default_factory=EwlState)
    field1: Union[Fock, Thermal] = field(default_factory=Fock)
    field2: Union[Fock, Thermal] = field(default_factory=Fock)
    pulses: PulseSchedule = field(default_factory=PulseSchedule.none)
    grid: Grid = field(default_factory=lambda: TimeGrid(2 * math.pi, 201))
    verify: bool = False

    def scenario(self):
        """Validated :class:`Scenario`; errors are re-raised naming the offending block."""
        checks = [("params", self.params), ("pulses", self.pulses), ("field1", self.field1),
                  ("field2", self.field2), ("atoms", self.atoms)]
        for name, part in checks:
            try:
                part.validate()
            except ModelError as exc:
                raise type(exc)(f"{name}: {exc}") from None
        if isinstance(self.grid, StroboscopicGrid) and not self.pulses.pulsed:
            raise ConfigParseError("stroboscopic grid requires ideal_pi pulses", field="grid")
        return validate(self.params, self.pulses, (self.field1, self.field2), self.atoms)

    def times(self):
        return self.grid.times(self.pulses)

    def to_dict(self):
        mu, nu = complex(self.atoms.mu), complex(self.atoms.nu)
        out = {
            "params": {"g": self.params.g, "omega": self.params.omega, "delta": self.params.delta},
            "atoms": {"a": self.atoms.a, "mu_re": mu.real, "mu_im": mu.imag,
                      "nu_re": nu.real, "nu_im": nu.imag},
            "field1": _field_to_dict(self.field1),
            "field2": _field_to_dict(self.field2),
            "pulses": ({"mode": "ideal_pi", "T": self.pulses.T} if self.pulses.pulsed
                       else {"mode": "none"}),
            "grid": ({"t_max": self.grid.t_max, "steps": self.grid.steps}
                     if isinstance(self.grid, TimeGrid)
                     else {"stroboscopic": True, "cycles": self.grid.cycles}),
            "verify": self.verify,
        }
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc):
        if not isinstance(doc, dict):
            raise ConfigParseError("top level must be a JSON object")
        params = _section(doc, "params")
        atoms = _section(doc, "atoms")
        pulses = _section(doc, "pulses")
        grid = _section(doc, "grid")
        verify = doc.get("verify", False)
        if not isinstance(verify, bool):
            raise ConfigParseError("must be true or false", field="verify")

        mode = _get(pulses, "mode", str, "pulses")
        if mode == "none":
            schedule = PulseSchedule.none()
        elif mode == "ideal_pi":
            schedule = PulseSchedule(PulseMode.IDEAL_PI, _get(pulses, "T", float, "pulses"))
        else:
            raise ConfigParseError(f"unknown pulse mode {mode!r}", field="pulses.mode")

        if grid.get("stroboscopic", False):
            cycles = _get(grid, "cycles", int, "grid")
            if cycles < 0:
                raise ConfigParseError("must be >= 0", field="grid.cycles")
            time_grid = StroboscopicGrid(cycles)
        else:
            steps = _get(grid, "steps", int, "grid")
            t_max = _get(grid, "t_max", float, "grid")
            if steps < 1:
                raise ConfigParseError("must be >= 1", field="grid.steps")
            if t_max < 0:
                raise ConfigParseError("must be >= 0", field="grid.t_max")
            time_grid = TimeGrid(t_max, steps)

        return cls(
            params=PhysicalParams(_get(params, "g", float, "params"),
                                  _get(params, "omega", float, "params"),
                                  _get(params, "delta", float, "params")),
            atoms=EwlState(_get(atoms, "a", float, "atoms"),
                           complex(_get(atoms, "mu_re", float, "atoms"),
                                   _get(atoms, "mu_im", float, "atoms", 0.0)),
                           complex(_get(atoms, "nu_re", float, "atoms"),
                                   _get(atoms, "nu_im", float, "atoms", 0.0))),
            field1=_field_from_dict(_section(doc, "field1"), "field1"),
            field2=_field_from_dict(_section(doc, "field2"), "field2"),
            pulses=schedule,
            grid=time_grid,
            verify=verify,
        )

    @classmethod
    def from_json(cls, text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigParseError(exc.msg, line=exc.lineno) from None
        return cls.from_dict(doc)


def _section(doc, key):
    if key not in doc:
        raise ConfigParseError("missing section", field=key)
    sec = doc[key]
    if not isinstance(sec, dict):
        raise ConfigParseError("must be a JSON object", field=key)
    return sec


_MISSING = object()


def _get(sec, key, kind, prefix, default=_MISSING):
    path = f"{prefix}.{key}"
    if key not in sec:
        if default is _MISSING:
            raise ConfigParseError("missing value", field=path)
        return default
    value = sec[key]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigParseError(f"expected an integer, got {value!r}", field=path)
        return value
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigParseError(f"expected a number, got {value!r}", field=path)
        return float(value)
    if not isinstance(value, kind):
        raise ConfigParseError(f"expected {kind.__name__}, got {value!r}", field=path)
    return value


def _field_to_dict(f):
    if isinstance(f, Fock):
        return {"kind": "fock", "n": f.n}
    return {"kind": "thermal", "mbar": f.mbar, "tail_epsilon": f.tail_epsilon}


def _field_from_dict(sec, prefix):
    kind = _get(sec, "kind", str, prefix)
    if kind == "fock":
        return Fock(_get(sec, "n", int, prefix))
    if kind == "thermal":
        return Thermal(_get(sec, "mbar", float, prefix),
                       _get(sec, "tail_epsilon", float, prefix, DEFAULT_TAIL_EPSILON))
    raise ConfigParseError(f"unknown field kind {kind!r}", field=f"{prefix}.kind")


# ---------------------------------------------------------------- sweeps

SWEEP_AXES = {
    "params.g", "params.omega", "params.delta",
    "atoms.a",
    "pulses.T",
    "field1.n", "field2.n", "field1.mbar", "field2.mbar",
    "grid.t_max",
}


def with_value(config, axis, value):
    """Copy of ``config`` with the numeric field at ``axis`` replaced."""
    if axis not in SWEEP_AXES:
        raise UnknownAxis(f"cannot sweep {axis!r}; choose one of {sorted(SWEEP_AXES)}")
    section, key = axis.split(".")
    if section == "pulses":
        return replace(config, pulses=PulseSchedule.ideal(float(value)))
    if section == "grid":
        if not isinstance(config.grid, TimeGrid):
            raise UnknownAxis("grid.t_max needs a t_max/steps grid")
        return replace(config, grid=replace(config.grid, t_max=float(value)))
    part = getattr(config, section)
    if section.startswith("field"):
        if (key == "n") != isinstance(part, Fock):
            raise UnknownAxis(f"{axis} does not apply to a {type(part).__name__} field")
        value = int(value) if key == "n" else float(value)
    else:
        value = float(value)
    return replace(config, **{section: replace(part, **{key: value})})


# ---------------------------------------------------------------- presets

_BELL = EwlState(1.0, math.sqrt(0.5), -math.sqrt(0.5))
_VACUUM = Fock(0)
_TIME_GRID = TimeGrid(3 * math.pi, 301)


def _cycles(T, t_end):
    return int(math.ceil(t_end / (2 * T) - 1e-9))


def _fmt(x):
    return f"{x:g}"


def preset(name):
    """Parameter sets for the figure presets, keyed by a file-friendly tag."""
    base = ScenarioConfig(PhysicalParams(1.0, 1.0, 0.0), _BELL, _VACUUM, _VACUUM,
                          PulseSchedule.none(), _TIME_GRID, False)
    out = {}
    if name == "fig1":
        for a in np.linspace(0.0, 1.0, 51):
            cfg = replace(base, atoms=replace(_BELL, a=float(a)), grid=TimeGrid(3 * math.pi, 300))
            out[f"fig1_a{a:.2f}"] = cfg
    elif name in ("fig2", "fig4"):
        a = 1.0 if name == "fig2" else 0.5
        for T in (0.7, 0.4, 0.1, None):
            pulses = PulseSchedule.none() if T is None else PulseSchedule.ideal(T)
            tag = f"{name}_T{_fmt(T)}" if T is not None else f"{name}_nopulse"
            out[tag] = replace(base, atoms=replace(_BELL, a=a), pulses=pulses)
    elif name == "fig3a":
        T = 0.1
        for delta in (4.0, 2.0, 1.0):
            out[f"fig3a_delta{_fmt(delta)}"] = replace(
                base, params=PhysicalParams(1.0, 1.0, delta), pulses=PulseSchedule.ideal(T),
                grid=StroboscopicGrid(_cycles(T, 4 * math.pi)))
    elif name == "fig3b":
        for T in (0.2, 0.15, 0.1):
            out[f"fig3b_T{_fmt(T)}"] = replace(
                base, params=PhysicalParams(1.0, 1.0, 1.0), pulses=PulseSchedule.ideal(T),
                grid=StroboscopicGrid(_cycles(T, 4 * math.pi)))
    elif name == "fig5":
        thermal = Thermal(0.2)
        therm = replace(base, params=PhysicalParams(1.0, 1.0, 1.0), field1=thermal, field2=thermal)
        for T in (0.2, 0.15, 0.1):
            out[f"fig5_T{_fmt(T)}"] = replace(therm, pulses=PulseSchedule.ideal(T),
                                              grid=StroboscopicGrid(_cycles(T, 8 * math.pi)))
        out["fig5_nopulse"] = replace(therm, grid=TimeGrid(8 * math.pi, 401))
    else:
        raise UnknownPreset(f"unknown preset {name!r}; choose one of {', '.join(PRESETS)}")
    return out


PRESETS = ("fig1", "fig2", "fig3a", "fig3b", "fig4", "fig5")
