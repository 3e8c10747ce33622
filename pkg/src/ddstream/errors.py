"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Shape or dimension mismatch in a tensor or layer operation."""


class ConfigError(ValueError):
    """Inconsistent or unparseable model/training configuration."""


class NotStreamableError(ValueError):
    """Model head cannot produce causal per-frame decisions."""


class FormatError(Exception):
    """Malformed binary artifact (weights or feature file)."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class TruncatedFileError(FormatError):
    """File ends before the declared payload is complete."""


class DimensionOverflowError(FormatError):
    """Declared dimensions are zero or implausibly large."""


class MissingParameterError(FormatError):
    """A tensor expected by the model config is absent from the file."""


class WeightShapeError(FormatError):
    """A stored tensor's shape disagrees with the model config."""
