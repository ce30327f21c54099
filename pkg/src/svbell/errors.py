"""Exception types shared across the package."""


class PhotonNumberRangeError(ValueError):
    """Photon number per beam exceeds the supported accuracy range (N <= 60)."""


class CapExceededError(RuntimeError):
    """The requested truncation mass is unreachable under the photon-number cap.

    Signals that the gain is too high for the configured accuracy.
    """


class EnumerationBudgetError(ValueError):
    """Exhaustive strategy enumeration would exceed the configured budget."""
