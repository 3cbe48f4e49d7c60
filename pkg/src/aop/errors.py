"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operand shapes are inconsistent with the operation's contract."""


class FormatError(ValueError):
    """A serialized file (tensor blob, weights, adapter directory) is invalid."""


class EmptyMaskError(ValueError):
    """A mask with no foreground pixels was passed where one is required."""


class NoReferenceMasksError(ValueError):
    """An elimination step was requested without any reference masks."""


class GenerationError(RuntimeError):
    """Scene generation could not satisfy its spec (placement rejection limit)."""


class TrainingDivergenceError(RuntimeError):
    """Training produced a non-finite loss."""


class UndefinedMetricError(ValueError):
    """A metric was requested on inputs for which it is undefined."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration values."""
