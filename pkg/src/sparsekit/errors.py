"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operand shapes are incompatible."""


class DomainError(ValueError):
    """A numeric argument is outside its valid range."""


class ConfigError(ValueError):
    """An experiment configuration field is invalid or unknown."""


class DataFormatError(ValueError):
    """A dataset file does not match the expected binary layout."""


class TrainingDiverged(RuntimeError):
    """Loss became non-finite during training."""
