"""Exception hierarchy shared across the package."""


class VtvError(Exception):
    """Base class for all vtvlab errors."""


class InvalidFrameError(VtvError):
    """Pellet frame contains non-finite or otherwise unusable coordinates."""


class InvalidTraceError(VtvError):
    """Palate trace is empty, degenerate, or non-finite."""


class EmptyInputError(VtvError):
    """An operation received an empty sequence where at least one item is required."""


class ShapeMismatchError(VtvError):
    """Array arguments disagree in shape or length."""


class OrientationError(VtvError):
    """A tract-variable frame is already in the requested orientation."""


class TrainingDivergedError(VtvError):
    """Training produced a non-finite loss."""

    def __init__(self, epoch, message=None):
        self.epoch = epoch
        super().__init__(message or f"non-finite loss at epoch {epoch}")


class MalformedIntervalError(VtvError):
    """Phone interval with end <= start or an unparseable row."""


class IntervalOverlapError(VtvError):
    """Two phone intervals in the same file overlap."""


class OutOfRangeError(VtvError):
    """Interval lies outside the matrix it indexes."""


class EmptyWindowError(VtvError):
    """Interval selected zero samples."""


class RatingValidationError(VtvError):
    """A rating record violates the scale rules."""


class RankDeficientError(VtvError):
    """Design matrix is rank deficient after dropping empty cells."""

    def __init__(self, aliased, message=None):
        self.aliased = list(aliased)
        super().__init__(message or f"aliased design columns: {', '.join(self.aliased)}")


class ConvergenceError(VtvError):
    """Optimizer failed to converge; carries the iteration trace."""

    def __init__(self, trace, message=None):
        self.trace = trace
        super().__init__(message or "profiled criterion failed to converge")


class IdentifiabilityError(VtvError):
    """A random-effect level cannot be separated from the residual."""


class EstimabilityError(VtvError):
    """Requested marginal-mean cell is not estimable from the fitted design."""


class UnknownLevelError(VtvError):
    """Contrast references a factor level absent from the grid."""


class PValueDomainError(VtvError):
    """A p-value lies outside [0, 1]."""


class MissingChannelError(VtvError):
    """Observation is missing a tract-variable channel."""


class MissingGroupError(VtvError):
    """Analysis dataset lacks a required phone group."""

    def __init__(self, missing, message=None):
        self.missing = list(missing)
        super().__init__(message or f"missing phone groups: {', '.join(self.missing)}")


class EmptyAnalysisError(VtvError):
    """All rows were filtered out before fitting."""


class DegenerateSampleError(VtvError):
    """Sample covariance is singular (collinear or too few points)."""


class ManifestError(VtvError):
    """Training manifest is malformed or violates the split rules."""


class ConfigError(VtvError):
    """Pipeline configuration is invalid or references missing paths."""
