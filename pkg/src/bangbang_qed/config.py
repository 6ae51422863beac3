"""Physical parameters, pulse schedules, initial atom and field states."""
import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import (
    NegativeCoupling,
    NegativeMeanPhotons,
    NegativePhotonNumber,
    NonFiniteParameter,
    NonPositiveT,
    NonUnitAmplitudes,
    PurityOutOfRange,
)
from .xstate import XDensityMatrix

AMPLITUDE_NORM_TOL = 1e-9
DEFAULT_TAIL_EPSILON = 1e-12


@dataclass(frozen=True)
class PhysicalParams:
    """Coupling ``g``, cavity frequency ``omega`` and detuning ``delta``.

    The atomic transition frequency is ``omega0 = omega + delta``.
    """

    g: float = 1.0
    omega: float = 1.0
    delta: float = 0.0

    @property
    def omega0(self):
        return self.omega + self.delta

    def validate(self):
        for name in ("g", "omega", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise NonFiniteParameter(f"{name} must be finite, got {getattr(self, name)}")
        if self.g <= 0:
            raise NegativeCoupling(f"coupling g must be > 0, got {self.g}")
        return self


class PulseMode(enum.Enum):
    NONE = "none"
    IDEAL_PI = "ideal_pi"


@dataclass(frozen=True)
class PulseSchedule:
    """Train of instantaneous pi-pulses on sigma_z, spaced by ``T``.

    Only the zero-duration limit is modelled; pulse width and amplitude are
    never stored.
    """

    mode: PulseMode = PulseMode.NONE
    T: Union[float, None] = None

    @classmethod
    def none(cls):
        return cls(PulseMode.NONE, None)

    @classmethod
    def ideal(cls, T):
        return cls(PulseMode.IDEAL_PI, T)

    @property
    def pulsed(self):
        return self.mode is PulseMode.IDEAL_PI

    def validate(self):
        if self.pulsed:
            if self.T is None or not math.isfinite(self.T) or self.T <= 0:
                raise NonPositiveT(f"pulse interval T must be > 0, got {self.T}")
        return self


@dataclass(frozen=True)
class Fock:
    """Cavity field in the number state |n>."""

    n: int = 0

    def validate(self):
        if int(self.n) != self.n or self.n < 0:
            raise NegativePhotonNumber(f"Fock photon number must be a non-negative integer, got {self.n}")
        return self

    def weights(self):
        p = np.zeros(self.n + 1)
        p[self.n] = 1.0
        return p

    @property
    def tail_mass(self):
        return 0.0


@dataclass(frozen=True)
class Thermal:
    """Thermal field with mean photon number ``mbar``, cut where the tail mass drops below ``tail_epsilon``."""

    mbar: float = 0.0
    tail_epsilon: float = DEFAULT_TAIL_EPSILON

    def validate(self):
        if not math.isfinite(self.mbar) or self.mbar < 0:
            raise NegativeMeanPhotons(f"mean photon number must be >= 0, got {self.mbar}")
        if not 0 < self.tail_epsilon < 1:
            raise NonFiniteParameter(f"tail_epsilon must lie in (0, 1), got {self.tail_epsilon}")
        return self

    def weights(self):
        return thermal_weights(self.mbar, self.tail_epsilon)[0]

    @property
    def tail_mass(self):
        return 1.0 - math.fsum(self.weights())


FieldSpec = Union[Fock, Thermal]


@dataclass(frozen=True)
class EwlState:
    """Extended Werner-like state ``a |Phi><Phi| + (1 - a) I/4``.

    ``|Phi> = mu |g>|e> + nu |e>|g>``.
    """

    a: float = 1.0
    mu: complex = math.sqrt(0.5)
    nu: complex = -math.sqrt(0.5)

    def validate(self):
        if not math.isfinite(self.a) or not 0.0 <= self.a <= 1.0:
            raise PurityOutOfRange(f"purity a must lie in [0, 1], got {self.a}")
        norm = abs(self.mu) ** 2 + abs(self.nu) ** 2
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise NonUnitAmplitudes(f"|mu|^2 + |nu|^2 = {norm}, expected 1")
        return self


@dataclass(frozen=True)
class Scenario:
    """A validated configuration: everything needed to evolve the two atoms."""

    params: PhysicalParams = field(default_factory=PhysicalParams)
    pulses: PulseSchedule = field(default_factory=PulseSchedule.none)
    field1: FieldSpec = field(default_factory=Fock)
    field2: FieldSpec = field(default_factory=Fock)
    atoms: EwlState = field(default_factory=EwlState)


def validate(params, pulses, fields, atoms):
    """Check every invariant and return the bundled :class:`Scenario`.

    Nothing is normalised silently; out-of-range inputs raise.
    """
    params.validate()
    pulses.validate()
    field1, field2 = fields
    field1.validate()
    field2.validate()
    atoms.validate()
    return Scenario(params, pulses, field1, field2, atoms)


def initial_ewl_matrix(atoms):
    a = atoms.a
    mu, nu = complex(atoms.mu), complex(atoms.nu)
    return XDensityMatrix(
        rho11=(1 - a) / 4,
        rho22=(1 + (4 * abs(nu) ** 2 - 1) * a) / 4,
        rho33=(1 + (4 * abs(mu) ** 2 - 1) * a) / 4,
        rho44=(1 - a) / 4,
        rho23=nu * mu.conjugate() * a,
        rho14=0j,
    )


def thermal_weights(mbar, tail_epsilon=DEFAULT_TAIL_EPSILON):
    """Geometric photon-number distribution truncated by tail mass.

    Returns ``(p, n_max)`` with ``p[n] = mbar**n / (1 + mbar)**(n + 1)`` for
    ``n <= n_max``, ``n_max`` being the smallest cutoff whose discarded mass
    ``(mbar / (1 + mbar))**(n_max + 1)`` is at most ``tail_epsilon``.
    """
    if not math.isfinite(mbar) or mbar < 0:
        raise NegativeMeanPhotons(f"mean photon number must be >= 0, got {mbar}")
    if mbar == 0:
        return np.array([1.0]), 0
    ratio = mbar / (1 + mbar)
    n_max = max(0, math.ceil(math.log(tail_epsilon) / math.log(ratio)) - 1)
    # guard against rounding in the logarithms
    while n_max > 0 and ratio ** n_max <= tail_epsilon:
        n_max -= 1
    while ratio ** (n_max + 1) > tail_epsilon:
        n_max += 1
    n = np.arange(n_max + 1)
    return (1 - ratio) * ratio ** n, n_max
