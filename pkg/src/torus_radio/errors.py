class DomainError(ValueError):
    """Input outside the domain of an operation."""


class UnsupportedOrderError(DomainError):
    """Cycle order (or parity case) that no construction handles."""
