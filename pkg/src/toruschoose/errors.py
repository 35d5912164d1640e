"""Exception hierarchy shared by every module."""


class ToruschooseError(Exception):
    pass


class InvalidParameter(ToruschooseError, ValueError):
    """A numeric parameter is outside its documented range."""


class InvalidInput(ToruschooseError, ValueError):
    """A structural precondition on a graph or assignment does not hold."""


class OutOfDomain(InvalidParameter):
    pass


class Uncolorable(InvalidInput):
    """Raised for coloring requests on graphs containing loops."""


class LimitExceeded(ToruschooseError):
    """The instance is larger than the configured desk-scale limit."""


class ConditionNotApplicable(InvalidInput):
    pass


class InternalConsistencyError(ToruschooseError, RuntimeError):
    """A certified construction step failed; this indicates a bug.

    ``bundle`` carries whatever is needed to reproduce the failure.
    """

    def __init__(self, message, bundle=None):
        super().__init__(message)
        self.bundle = dict(bundle or {})
