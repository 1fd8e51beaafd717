"""Exception hierarchy shared by the engine, the CLI and the dashboard."""


class ShellGapError(Exception):
    """Base class for every engine error."""


class InvalidSequenceError(ShellGapError, ValueError):
    """Increments that do not form a gap sequence, or index 0."""


class InvalidPermutationError(ShellGapError, ValueError):
    """Values that are not a bijection on 1..n."""


class DomainError(ShellGapError, ValueError):
    """Argument outside the domain of a formula or operation."""


def _spaced(value):
    return f"{value:,}".replace(",", " ")


class CapacityError(ShellGapError):
    """A space is larger than the configured enumeration bound."""

    def __init__(self, what, cardinality, limit):
        self.what = what
        self.cardinality = cardinality
        self.limit = limit
        super().__init__(
            f"{what}: {_spaced(cardinality)} elements exceeds the limit of {_spaced(limit)}"
        )


class CheckpointError(ShellGapError):
    """Checkpoint is corrupt or belongs to another n or engine version."""


class VerificationError(ShellGapError):
    """An invariant suite reported a failure."""
