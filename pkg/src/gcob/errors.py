"""Exception types raised across the package."""


class GcobError(Exception):
    """Base class for all package errors."""


class NotAGroup(GcobError):
    """A multiplication table fails one of the group axioms."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}: {witness}")
        self.witness = witness


class ClosureCapExceeded(GcobError):
    pass


class OrderCapExceeded(GcobError):
    pass


class BudgetExceeded(GcobError):
    """The state space |G|^(2n) is larger than the configured budget."""

    def __init__(self, order, genus, size, budget):
        super().__init__(
            f"state space {order}^{2 * genus} = {size} exceeds budget {budget}"
        )
        self.size = size
        self.budget = budget


class NotPrime(GcobError):
    pass


class NonIntegralResult(GcobError):
    pass


class UnknownGroup(GcobError):
    pass


class OrderMismatch(GcobError):
    pass


class CatalogSyntaxError(GcobError):
    """Malformed line in a catalog file."""

    def __init__(self, message, path=None, line=None, column=None):
        where = f"{path or '<catalog>'}:{line}"
        if column is not None:
            where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
        self.column = column
