"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """An operation was invoked with incompatible or unusable options."""


class StructuralError(ValueError):
    """Two objects that must agree structurally (alphabets, dimensions) do not."""


class BudgetExceededError(RuntimeError):
    """An exact enumeration would exceed its declared budget; no guess is made."""
