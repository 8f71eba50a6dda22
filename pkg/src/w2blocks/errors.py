"""Exception hierarchy shared by every module of the package."""


class W2BlocksError(Exception):
    pass


class InvalidArgument(W2BlocksError, ValueError):
    """Input violates an operation's precondition (bad partition, wrong block, ...)."""


class NotFound(W2BlocksError, LookupError):
    pass


class Unsupported(W2BlocksError, NotImplementedError):
    """Request is well-formed but outside the weight-2 / p != 2 theory."""


class InternalError(W2BlocksError, RuntimeError):
    """Two computations that must agree did not; signals a bug, not bad input."""


class VerificationFailure(W2BlocksError):
    def __init__(self, check, witness):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {witness}")
