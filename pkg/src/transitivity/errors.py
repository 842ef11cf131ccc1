class TransitivityError(Exception):
    """Base class for errors raised by this package."""


class ContractError(TransitivityError, ValueError):
    """An operation was called outside its precondition."""


class MalformedPartition(TransitivityError, ValueError):
    """Partition classes overlap, are empty, or fail to cover the vertex set."""


class InvalidCertificate(TransitivityError, ValueError):
    """A recognizer certificate does not certify the graph it came with."""


class NotInClass(TransitivityError, ValueError):
    """The graph is not a member of the class an operation requires."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(TransitivityError, RuntimeError):
    """An exhaustive search was refused or abandoned because of its budget."""


class ParseError(TransitivityError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
