class ToricError(Exception):
    """Base class for errors raised by the toric cube library."""


class InputError(ToricError, ValueError):
    """A precondition on the arguments of an operation is violated."""


class ContainmentError(InputError):
    """A cone expected to lie inside another one does not.

    Parameters
    ----------
    message : str
        Human readable description
    witness : tuple[int, ...]
        A ray of the inner cone outside the outer cone
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class ContractViolation(ToricError):
    """An internal invariant failed. Always a bug."""
