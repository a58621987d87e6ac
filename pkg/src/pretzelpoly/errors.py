"""Exception hierarchy. The CLI maps each family to an exit code."""


class PretzelError(Exception):
    pass


class InvalidSpecError(PretzelError, ValueError):
    """Malformed pretzel tuple (empty, zero entry, unparsable)."""


class PreconditionError(PretzelError, ValueError):
    """A method was asked for input outside the family or range it covers."""


class UnsupportedFamilyError(PreconditionError):
    pass


class UnsupportedParameterError(PreconditionError):
    pass


class DomainError(PreconditionError):
    pass


class BudgetExceededError(PretzelError, RuntimeError):
    def __init__(self, crossings: int, limit: int):
        self.crossings = crossings
        self.limit = limit
        super().__init__(
            f"diagram has {crossings} crossings, above the enumeration budget of {limit}"
        )
