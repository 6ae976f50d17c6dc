"""Shared exception types; the CLI maps these onto exit codes."""


class InputError(ValueError):
    """Semantically invalid input (bad composition, vertex out of range, ...)."""


class ParseError(InputError):
    """Malformed textual input; carries a best-effort position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotABuildingSetError(InputError):
    """Union-closure (or singleton) violation; names the offending pair."""


class CapacityError(RuntimeError):
    """A documented size cap was exceeded; names the limiting parameter."""
