"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's stated domain."""


class BudgetError(RuntimeError):
    """Request exceeds the configured sieve / enumeration budget."""


class PrimorialOverflowError(OverflowError):
    """Primorial value would not fit in an unsigned 64-bit word."""
