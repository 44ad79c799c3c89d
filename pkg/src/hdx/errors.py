"""Exception types shared across the package."""


class InputError(ValueError):
    """The caller's input is malformed or mathematically inadmissible."""


class ParseError(InputError):
    """Syntax error in a text input; carries the character position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class MacaulayViolationError(InputError):
    """A prescribed Hilbert function cannot come from a graded ideal."""


class CrossCheckError(RuntimeError):
    """Two independent computation routes disagreed; the result is suspect."""
