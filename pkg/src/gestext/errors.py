"""Exception types shared across the engine, text model, and replay tools."""


class GestextError(Exception):
    """Base class for all library errors."""


class NoTextError(GestextError):
    """Raised when an operation needs text geometry but the layout is empty."""


class OutOfRangeError(GestextError):
    """Raised for an index outside the document's sentence or word range."""


class ProtocolError(GestextError):
    """Raised when an event stream violates the touch protocol
    (e.g. a Move or Up for a finger that was never put down)."""


class LogParseError(GestextError):
    """Raised for a malformed event-log line; carries the line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
