"""Exception types shared across the package."""


class ConstructionError(ValueError):
    """A code or field object cannot be built from the given data."""


class RangeError(ValueError):
    """An argument is outside its documented range."""


class EmbedError(ConstructionError):
    """The requested subfield embedding does not exist."""


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed the allowed budget."""


class ConfigError(ValueError):
    """Decoder preconditions are not met by the supplied codes."""
