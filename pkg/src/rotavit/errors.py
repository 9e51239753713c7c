"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes, so raising the right class matters:
validation/configuration/shape/contract problems exit 2, numeric failures
exit 3, I/O failures exit 4.
"""


class RotavitError(Exception):
    """Base class for all package errors."""


class DimensionError(RotavitError):
    """Operand shapes are incompatible; the message names both shapes."""


class ContractError(RotavitError):
    """A caller violated an operation's precondition."""


class ValidationError(RotavitError):
    """On-disk data failed consistency checks; the message lists offenders."""


class ConfigError(RotavitError):
    """A configuration value is unusable (empty pool, bad mode, ...)."""


class NumericError(RotavitError):
    """A numeric invariant broke (NaN loss, zero-norm prediction, ...)."""
