"""Exception hierarchy shared by every module of the package."""


class InvBinomError(Exception):
    """Base class for all package errors."""


class ParseError(InvBinomError, ValueError):
    """Malformed input text.

    ``position`` is a character offset for expressions; ``line`` is a
    1-based line number for catalog files.
    """

    def __init__(self, message, position=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.message = message
        self.position = position
        self.line = line


class UnknownIdentifierError(ParseError):
    pass


class UnknownConstantError(InvBinomError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DomainError(InvBinomError, ValueError):
    """Argument outside the real domain of an elementary function."""

    def __init__(self, message, expr=None):
        super().__init__(message if expr is None else f"{message} in {expr}")
        self.expr = expr


class BranchCutError(DomainError):
    """Argument lies exactly on a principal-branch cut."""


class PoleError(DomainError):
    pass


class SequenceIndexError(InvBinomError, IndexError):
    pass


class OracleInapplicableError(InvBinomError, ValueError):
    pass


class ConvergenceError(InvBinomError):
    """Series is not convergent at the requested point."""


class BudgetExceededError(InvBinomError):
    """Summation did not reach its error target within ``max_terms``."""


class PreconditionError(InvBinomError, ValueError):
    pass


class ConfigurationError(InvBinomError, ValueError):
    pass


class DuplicateIdError(ParseError):
    def __init__(self, identity_id, line=None):
        super().__init__(f"duplicate identity id {identity_id!r}", line=line)
        self.identity_id = identity_id


class UnknownIdError(InvBinomError, KeyError):
    def __init__(self, identity_id, suggestions=()):
        self.identity_id = identity_id
        self.suggestions = list(suggestions)
        msg = f"unknown identity id {identity_id!r}"
        if self.suggestions:
            msg += "; did you mean: " + ", ".join(self.suggestions)
        super().__init__(msg)

    def __str__(self):
        return self.args[0]
