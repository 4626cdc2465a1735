"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller-supplied value violates an operation's precondition."""


class LoopContractionError(InputError):
    """Contraction was requested on a loop edge."""


class EvaluationError(ValueError):
    """A polynomial was evaluated with an unbound variable."""


class CapacityError(RuntimeError):
    """An exact computation would exceed the configured enumeration bounds."""


class SingularInputError(ValueError):
    """A formula was evaluated at a point where it is undefined (v = 0)."""


class ParseError(ValueError):
    """A graph document violates the input schema."""
