"""Exception types shared across the toolkit.

ConfigurationError (and its subclass FormatError) signal bad run
configuration or unusable resource files and map to CLI exit code 2;
every other ToolkitError is a computation-time failure (exit code 1).
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class ComputationError(ToolkitError):
    """A computation could not be carried out (degenerate input, empty corpus)."""


class ConfigurationError(ToolkitError):
    """Invalid run configuration or missing/unusable resource."""


class FormatError(ConfigurationError):
    """Malformed resource file; carries the offending path and line number."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no
