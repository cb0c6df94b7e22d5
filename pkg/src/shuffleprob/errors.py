"""Exception types shared across the package."""


class DomainError(ValueError):
    """An algebraic precondition was violated (wrong kind of operand,
    value outside the operation's domain, ...)."""


class ValidationError(ValueError):
    """Malformed user-facing data (distribution maps, JSON files, CLI input)."""
