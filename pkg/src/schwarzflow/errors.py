"""Exception types raised by the library."""


class SchwarzFlowError(Exception):
    """Base class for all library errors."""


class BranchCutHit(SchwarzFlowError):
    """A point lies on a declared branch cut."""


class OutOfDomain(SchwarzFlowError):
    """A point is outside the region where a formula is defined."""


class SingularPoint(SchwarzFlowError):
    """A point coincides with a pole or branch point of the evaluated function."""


class RateLawUnderdetermined(SchwarzFlowError):
    """The rate law of a moving family does not fix the requested rates."""


class ToleranceNotMet(SchwarzFlowError):
    """Adaptive quadrature stopped before reaching the requested tolerance."""

    def __init__(self, message, estimate, error):
        super().__init__(f"{message} (estimate={estimate!r}, error bound={error:.3e})")
        self.estimate = estimate
        self.error = error


class SingularPanel(SchwarzFlowError):
    """The integrand failed or returned a non-finite value on a quadrature node."""


class BranchJump(SchwarzFlowError):
    """A square-root branch could not be continued along a path."""


class SeriesDiverged(SchwarzFlowError):
    """A power series did not converge in double precision."""


class KernelUnnormalized(SchwarzFlowError):
    """A Riemann kernel violates its normalisation on the characteristics."""


class NonRealResult(SchwarzFlowError):
    """A quantity that must be real came out with a significant imaginary part."""


class OutOfSupport(SchwarzFlowError):
    """A density was requested outside its support."""


class StencilCrossesSingularity(SchwarzFlowError):
    """A finite-difference stencil reaches too close to a singular set."""


class ScenarioMismatch(SchwarzFlowError):
    """An operation was requested for a scenario it does not apply to."""


class ConfigInvalid(SchwarzFlowError):
    """A scenario configuration failed validation; ``field`` names the offender."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
