"""Exception types shared by all modules."""


class LagcellError(Exception):
    pass


class DomainError(LagcellError, ValueError):
    """Input lies outside the domain of an operation."""


class ResourceError(LagcellError, RuntimeError):
    """Requested rank exceeds the configured enumeration bound."""


class IntegrityError(LagcellError, RuntimeError):
    """A structural invariant (e.g. d∘d = 0) is violated."""
