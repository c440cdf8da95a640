"""Exception types shared across the package."""


class BlowupLabError(Exception):
    """Base class for all package-specific failures."""


class DomainError(BlowupLabError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConfigError(BlowupLabError, ValueError):
    """A run configuration is malformed (unknown key, bad type, missing file)."""


class NoBlowupError(BlowupLabError):
    """The quantity stayed bounded up to the configured horizon."""

    def __init__(self, message: str, t_max: float | None = None):
        super().__init__(message)
        self.t_max = t_max


class StepUnderflowError(BlowupLabError):
    """Adaptive step size collapsed before reaching the blow-up threshold."""


class CFLViolationError(BlowupLabError, ValueError):
    """Time step too large for the spatial step (dt must be <= cfl * dr)."""


class BoundaryContactError(BlowupLabError):
    """The support cone reached the outer grid boundary; the grid is too small."""


class NaNDetectedError(BlowupLabError):
    """Non-finite values appeared during time stepping."""

    def __init__(self, message: str, last_stable_time: float):
        super().__init__(message)
        self.last_stable_time = last_stable_time
