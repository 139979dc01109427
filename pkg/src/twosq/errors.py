"""Exception types shared by every module.

The three classes map one-to-one onto the CLI exit codes: bad input (2),
resource-bound refusal (3), internal defect (1).
"""


class ValidationError(ValueError):
    """The input was rejected before any real computation ran."""


class ResourceBoundError(RuntimeError):
    """The input is valid but exceeds the configured bound for this code path."""


class InvariantError(RuntimeError):
    """An internal invariant failed: a defect, never a consequence of bad input."""
