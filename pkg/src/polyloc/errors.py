"""Exception types shared across the engine."""


class DimensionError(ValueError):
    """Operands disagree on variable count or matrix shape."""


class ParseError(ValueError):
    """Polynomial or problem-file syntax error, with position info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class PositiveDimensionalError(ValueError):
    """The ideal has infinitely many complex zeros; quotient bases, minimal
    polynomials and univariate representations do not exist."""


class PreconditionError(ValueError):
    """A solver hypothesis (zero-dimensionality, nondegenerate Hessian,
    constraint qualification, ...) failed on the given input."""


class EmptyCriticalSetError(PreconditionError):
    """No real critical points exist, so an attained minimum cannot."""


class ConstraintQualificationError(PreconditionError):
    """The constraint Jacobian is rank-deficient at a computed critical
    point."""


class InternalInvariantError(RuntimeError):
    """A contract the algorithms guarantee was violated; indicates a bug."""
