"""Exception types mapped onto CLI exit codes."""

__all__ = ["ConfigError", "DataFormatError", "SolverDivergenceError"]


class ConfigError(ValueError):
    """Invalid configuration value (CLI exit code 2)."""


class DataFormatError(ValueError):
    """Malformed tensor, mask or image file (CLI exit code 3)."""


class SolverDivergenceError(RuntimeError):
    """Solver produced a non-finite or runaway objective (CLI exit code 4).

    Carries the partial run report (when available) as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
