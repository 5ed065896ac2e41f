"""Exception hierarchy shared by the library and mapped to CLI exit codes."""


class RxIndexError(Exception):
    """Base class for every error raised by this package."""


class InputDomainError(RxIndexError, ValueError):
    """Malformed or out-of-range input."""


class DisconnectedGraphError(InputDomainError):
    pass


class CapExceededError(InputDomainError):
    """Input is larger than an exhaustive routine is willing to handle."""


class PreconditionError(RxIndexError):
    """Input graph contains a forbidden induced subgraph.

    ``pattern`` names the forbidden graph and ``witness`` lists the vertices
    of an induced copy in the input.
    """

    def __init__(self, message, pattern=None, witness=None):
        super().__init__(message)
        self.pattern = pattern
        self.witness = witness


class ContractError(RxIndexError):
    """An internal invariant failed on an input that passed its preconditions."""


class VerificationError(RxIndexError):
    """A coloring claimed to be 3-rainbow is not."""


class BudgetExceededError(RxIndexError):
    """Exact search ran out of time.

    ``lower`` is the smallest color count not yet ruled out and ``upper``
    the best verified coloring size found so far; ``witness`` attains
    ``upper``.
    """

    def __init__(self, message, lower, upper, witness=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness
