"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph data or an operation on a missing vertex/edge."""


class ClassViolationError(Exception):
    """A K3,3-subdivision was found in a context that assumes none exists.

    ``witness`` holds the offending TK3,3 when one has been extracted.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class K33Found(ClassViolationError):
    """Raised by the corner-set decomposition when a bridge proves the
    host graph contains a K3,3-subdivision (three or more corners on one
    bridge, or a bridge spanning a non-adjacent corner pair of an M
    pattern)."""


class NoMSubdivisionError(Exception):
    """No M-graph subdivision exists where the decision procedure needs one."""


class GenusBudgetExceeded(Exception):
    """The rotation-system search space exceeds the configured budget.

    The oracle refuses rather than sampling; ``required`` is the number of
    rotation systems that a full enumeration would visit.
    """

    def __init__(self, required, budget):
        super().__init__(
            f"rotation enumeration needs {required} systems, budget is {budget}"
        )
        self.required = required
        self.budget = budget
