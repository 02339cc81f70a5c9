"""Exception and warning types shared across the package."""


class NetallocError(Exception):
    """Base class for all package errors."""


class InvalidLinkError(NetallocError, ValueError):
    """A link is self-referential, out of range, or malformed."""


class EnumerationLimitError(NetallocError):
    """A subnetwork enumeration would exceed the configured cap."""

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(
            f"network has {size} links, exceeding the enumeration cap of {cap}"
        )


class DomainError(NetallocError, ValueError):
    """A subnetwork lies outside a value function's base network."""


class IncompleteInstanceError(NetallocError):
    """A table-form value function is missing a connected subnetwork entry."""


class NotComponentAdditiveError(NetallocError):
    """A value function failed the component-additivity requirement."""


class DegenerateWeightsError(NetallocError):
    """A weight system is incompatible with the target network."""


class InvalidStrategyError(NetallocError):
    """A strategy profile violated a mechanism constraint (e.g. the
    stage-2 split sum condition)."""


class InstanceValidationError(NetallocError):
    """An instance document failed semantic validation."""


class ZeroMonotonicityWarning(UserWarning):
    """The mechanism was invoked on a game that is not zero monotonic;
    equilibrium guarantees are void but simulation proceeds."""
