"""Exception hierarchy.

Every error carries a stable ``code`` string (the class name) that the CLI
echoes in its JSON error object.  Errors deriving from :class:`InternalError`
signal a broken invariant rather than bad input and map to exit status 3.
"""


class GWCountError(Exception):
    """Base class for all package errors."""

    @property
    def code(self):
        return type(self).__name__


class InputError(GWCountError):
    """Caller supplied data violating an operation's contract."""


class InternalError(GWCountError):
    """An identity that must hold by construction failed."""


class DegenerateClass(InputError):
    pass


class NotIrreducible(InputError):
    pass


class ContractViolation(InputError):
    pass


class InvalidInput(InputError):
    pass


class InvalidWeight(InputError):
    pass


class InvalidSystem(InputError):
    pass


class InvalidValuations(InputError):
    pass


class NotInvertible(InputError):
    pass


class NoRealPlace(InputError):
    pass


class NotGeneric(InputError):
    def __init__(self, conditions):
        self.conditions = list(conditions)
        super().__init__("family is not generic: " + ", ".join(self.conditions))


class TwistMismatch(InternalError):
    pass


class IdentificationFailure(InternalError):
    pass
