"""Exception types raised by the simulation pipeline."""


class ModelError(ValueError):
    """Base class for every error raised by this package."""


class NonUnitAmplitudes(ModelError):
    pass


class PurityOutOfRange(ModelError):
    pass


class NonPositiveT(ModelError):
    pass


class NegativeMeanPhotons(ModelError):
    pass


class NegativeCoupling(ModelError):
    pass


class NonFiniteParameter(ModelError):
    pass


class NegativePhotonNumber(ModelError):
    pass


class NegativeTime(ModelError):
    pass


class NotAStroboscopicTime(ModelError):
    pass


class TruncationTooCoarse(ModelError):
    pass


class EmptyGrid(ModelError):
    pass


class UnsortedGrid(ModelError):
    pass


class NegativeProbability(ModelError):
    pass


class CutoffTooSmall(ModelError):
    pass


class ConfigParseError(ModelError):
    """Malformed scenario document; ``field`` names the offending key path."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)


class UnknownPreset(ModelError):
    pass


class UnknownAxis(ModelError):
    pass
