"""Exception types shared across the package."""


class AffkacError(Exception):
    """Base class for all library errors."""


class ConstructionError(AffkacError):
    """Inadmissible family/rank combination for an affine type."""


class CrossTypeError(AffkacError):
    """Weights of two different affine types were mixed in one operation."""


class NotInRootSpan(AffkacError):
    """Weight has nonzero level, hence no expansion in simple roots."""


class PositiveLevelRequired(AffkacError):
    """Operation is only defined (or only terminates) at positive level."""


class InfiniteGroup(AffkacError):
    """J = I was requested where a finite parabolic subgroup is required."""


class NotRegular(AffkacError):
    """A regular dominant weight is required."""


class OutOfWindow(AffkacError):
    """Query lies outside the computed truncation window (unknown, not zero)."""


class LevelMismatch(AffkacError):
    """Levels of the supplied weights are inconsistent."""


class PreconditionFailed(AffkacError):
    """A documented precondition does not hold for the inputs."""


class InternalInvariantViolation(AffkacError):
    """The implementation reached an impossible state; indicates a bug."""
