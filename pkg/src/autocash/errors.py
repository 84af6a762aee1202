"""Exception hierarchy shared across the package."""


class AutoCashError(Exception):
    """Base class for all domain errors raised by this package."""


class DataError(AutoCashError):
    """Raised for malformed, inconsistent, or unusable input data."""


class EvaluationError(AutoCashError):
    """Raised when a model cannot be trained or scored on a dataset."""


class ArtifactError(AutoCashError):
    """Raised for unreadable, corrupted, or incompatible model artifacts."""


class PipelineError(AutoCashError):
    """Raised when a training-pipeline stage fails; names the stage at fault."""
