"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a structural invariant (mismatched spaces, bad labels, ...)."""


class PreconditionError(ValidationError):
    """An operation was called outside its stated domain."""


class ParseError(ValueError):
    """Malformed textual or JSON input.  Carries an optional token/position hint."""

    def __init__(self, message, token=None):
        if token is not None:
            message = f"{message} (at {token!r})"
        super().__init__(message)
        self.token = token
