"""Exception hierarchy shared across the package.

Every failure mode the library promises to detect maps to one of these, so
callers (and the CLI exit-code logic) can distinguish bad input from exceeded
resource budgets from falsified verdicts.
"""

from __future__ import annotations


class MultiboundError(Exception):
    """Base class for all package errors."""


class InputError(MultiboundError):
    """Malformed or inadmissible input (maps to CLI exit status 2)."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionMismatchError(InputError):
    """Monomials over different ambient variable counts were combined."""


class EmptyInputError(InputError):
    """An operation that needs at least one element received none."""


class UnitIdealError(InputError):
    """A constant monomial appeared among generators (the unit ideal)."""


class ZeroIdealError(InputError):
    """An operation requiring a nonzero ideal received the zero ideal."""


class LabelCollisionError(InputError):
    """Join factors share vertex labels; relabel one factor first."""


class NotAFaceError(InputError):
    """A link (or similar) was requested at a set that is not a face."""


class PreconditionError(MultiboundError):
    """A documented operation precondition does not hold for this input."""


class UndefinedCodimensionRowError(PreconditionError):
    """Shift data at the codimension row is undefined (simplex input)."""


class MalformedTableError(MultiboundError):
    """A Betti table lacks a row that the requested operation needs."""


class ResourceLimitError(MultiboundError):
    """A configured budget was exceeded (maps to CLI exit status 3)."""

    def __init__(self, budget: str, limit: int, message: str | None = None):
        self.budget = budget
        self.limit = limit
        super().__init__(message or f"budget {budget} exceeded (limit {limit})")


class CounterexampleError(MultiboundError):
    """A sweep found an instance falsifying the checked statement."""

    def __init__(self, theorem: str, canonical: str, record: dict):
        self.theorem = theorem
        self.canonical = canonical
        self.record = record
        super().__init__(f"counterexample for {theorem}: {canonical}")
