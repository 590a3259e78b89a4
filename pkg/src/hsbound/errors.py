"""Exception hierarchy. Each class carries a CLI exit status and a short code."""


class HSBoundError(Exception):
    exit_code = 1
    code = "E_GENERIC"


class InvalidArgumentError(HSBoundError, ValueError):
    code = "E_INVALID_ARGUMENT"


class InvalidDimensionError(InvalidArgumentError):
    code = "E_INVALID_DIMENSION"


class InvalidConfigurationError(InvalidArgumentError):
    code = "E_INVALID_CONFIGURATION"


class InvalidSequenceError(InvalidArgumentError):
    code = "E_INVALID_SEQUENCE"


class UnsupportedSizeError(InvalidArgumentError):
    code = "E_UNSUPPORTED_SIZE"


class DegenerateTableError(HSBoundError):
    """All coefficients with s >= 2 vanish; a / C(a) increases to 1 and has no maximizer."""

    exit_code = 3
    code = "E_DEGENERATE_TABLE"


class DivergenceError(HSBoundError):
    exit_code = 3
    code = "E_DIVERGENT_SERIES"


class TableFormatError(HSBoundError):
    """A serialized table or report could not be parsed; ``field`` names the culprit."""

    exit_code = 2
    code = "E_PARSE"

    def __init__(self, field, message):
        super().__init__(f"field '{field}': {message}")
        self.field = field
