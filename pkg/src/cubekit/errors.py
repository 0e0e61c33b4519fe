"""Exception types. Every error carries a stable ``code`` string used in CLI reports."""


class CubekitError(Exception):
    code = "ERROR"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details


class GraphInputError(CubekitError, ValueError):
    code = "INVALID_GRAPH"


class RejectLoop(GraphInputError):
    code = "REJECT_LOOP"


class RejectRange(GraphInputError):
    code = "REJECT_RANGE"


class ParamRangeError(CubekitError, ValueError):
    code = "PARAM_RANGE"


class DisconnectedPairError(CubekitError, ValueError):
    code = "DISCONNECTED_PAIR"


class NotConnectedError(CubekitError, ValueError):
    code = "NOT_CONNECTED"


class NotAnEdgeError(CubekitError, ValueError):
    code = "NOT_AN_EDGE"


class NotPartialCubeError(CubekitError, ValueError):
    code = "NOT_PARTIAL_CUBE"


class LabelingNotIsometric(CubekitError):
    code = "LABELING_NOT_ISOMETRIC"


class InducedDisconnectedError(CubekitError, ValueError):
    code = "INDUCED_DISCONNECTED"


class NotACycleError(CubekitError, ValueError):
    code = "NOT_A_CYCLE"


class NotAPathError(CubekitError, ValueError):
    code = "NOT_A_PATH"


class PathTooShortError(NotAPathError):
    code = "PATH_TOO_SHORT"


class OracleBoundExceeded(CubekitError):
    code = "ORACLE_BOUND_EXCEEDED"


class SizeBoundExceeded(CubekitError):
    code = "SIZE_BOUND_EXCEEDED"


class ParseError(CubekitError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message, line=line, column=column)
        self.line = line
        self.column = column


class InternalTheoremViolation(CubekitError, AssertionError):
    """Raised when a computed result contradicts a proven structural theorem."""

    code = "INTERNAL_THEOREM_VIOLATION"
