"""Exception taxonomy shared across the package.

The CLI maps these onto distinct exit codes (see cli.py); library code
raises them directly.
"""


class StarsepError(Exception):
    """Base class for all library errors."""


class InputError(StarsepError, ValueError):
    """Malformed input or a violated operation precondition."""


class CapacityError(StarsepError):
    """Instance exceeds a desk-scale cap (see STARSEP_MAX_N)."""


class HypothesisViolation(StarsepError):
    """A runtime-verified conclusion failed.

    Raised when a construction that is guaranteed on in-class inputs does
    not verify; it diagnoses an out-of-class input (or an implementation
    bug) and carries a concrete witness.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SamplingError(StarsepError):
    """Random sampling exhausted its budget; carries attempt statistics."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})
