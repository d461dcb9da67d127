"""Exception types shared across the package."""


class CharcoordsError(Exception):
    """Base class for package-specific errors."""


class NotAdmissible(CharcoordsError):
    """A diagonal switch would create an edge the representation cannot
    realize: the two opposite side products of the quadrilateral coincide.

    Callers usually convert this into a parabolic witness rather than
    treating it as fatal.  ``axis`` names the simultaneous switch, and
    ``step`` is the letter index when raised while applying a word.
    """

    def __init__(self, message="switch not admissible", axis=None, step=None):
        super().__init__(message)
        self.axis = axis
        self.step = step


class NotTypePreserving(CharcoordsError):
    """A peripheral entry vanishes, so the coordinate does not define a
    type-preserving representation."""

    def __init__(self, puncture):
        super().__init__(f"peripheral entry at v{puncture} is zero")
        self.puncture = puncture


class InternalInconsistency(CharcoordsError):
    """A mathematically guaranteed invariant failed; this signals a bug in
    the package, never bad input."""


class NotClosed(CharcoordsError):
    """A crossing sequence does not close up."""


class InvalidStep(CharcoordsError):
    """A crossing step is inconsistent with the triangulation."""


class MaxStepsExceeded(CharcoordsError):
    """The trace-reduction safety valve fired (termination is guaranteed, so
    this signals a bug or an absurdly small limit)."""


class RetryLimitExceeded(CharcoordsError):
    """Rejection sampling failed to produce a certifiable coordinate."""


class DegenerateOrbit(CharcoordsError):
    """A twist-map orbit hit the degenerate (parabolic) locus."""


class OffDomain(CharcoordsError):
    """Argument outside the domain of the covering map."""
