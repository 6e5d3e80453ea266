"""Exception types raised across the package."""


class DichromaticError(Exception):
    """Base class for all package errors."""


class NotChordalError(DichromaticError, ValueError):
    """The underlying graph of an input is not chordal."""


class C4FoundError(DichromaticError, ValueError):
    """A 4-cycle was found where none is allowed.

    ``witness`` holds the four vertices in cycle order.
    """

    def __init__(self, witness, message=None):
        self.witness = tuple(witness)
        super().__init__(message or f"bidirected graph contains C4 {self.witness}")


class InvalidColouringError(DichromaticError, ValueError):
    """A colouring is not a dicolouring of the digraph it was given with."""

    def __init__(self, message, cycle=None):
        self.cycle = tuple(cycle) if cycle is not None else None
        super().__init__(message)


class BudgetExceeded(DichromaticError):
    """The exact solver proved the answer exceeds the colour budget."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"dichromatic number exceeds budget {budget}")


class DecompositionError(DichromaticError, ValueError):
    """A tree-decomposition violates one of its axioms."""


class ParseError(DichromaticError, ValueError):
    """Malformed input in one of the text formats."""


class InvariantError(DichromaticError, AssertionError):
    """An internal invariant guaranteed by construction did not hold."""
