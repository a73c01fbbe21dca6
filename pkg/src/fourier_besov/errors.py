class UnsupportedParameters(ValueError):
    """Parameters fall outside the range where a verdict or norm is available."""


class DomainError(ValueError):
    """An argument violates the mathematical domain of an operation."""


class TruncationError(DomainError):
    """Requested dyadic level would alias on the sampling grid."""

    def __init__(self, message, max_level):
        super().__init__(message)
        self.max_level = max_level
