"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class NpnError(ValueError):
    """Base class for all npnsig errors."""


class InvalidLength(NpnError):
    pass


class InvalidDigit(NpnError):
    pass


class UnsupportedArity(NpnError):
    pass


class InvalidWord(NpnError):
    pass


class InvalidVariable(NpnError):
    pass


class InvalidAssignment(NpnError):
    pass


class InvalidArity(NpnError):
    """Cofactor arity outside ``[0, n]``."""


class InvalidSelection(NpnError):
    pass


class EmptyInput(NpnError):
    pass


class InputMismatch(NpnError):
    pass


class OracleArityLimit(NpnError):
    pass
