"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters violate a mathematical precondition."""


class CapacityError(RuntimeError):
    """The requested computation exceeds a configured size cap."""
