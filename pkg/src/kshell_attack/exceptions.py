class KShellError(Exception):
    """Base class for errors raised by this package."""


class DomainError(KShellError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ParseError(KShellError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    """An input edge list contains a self-loop."""


class PreconditionError(KShellError):
    """A graph mutation was requested that would break simplicity."""


class ConflictError(KShellError):
    """A rewiring move was validated against a graph state that has since changed."""


class StuckRoundError(KShellError):
    """No feasible rewiring was found within the retry budget.

    ``partial`` carries the :class:`~kshell_attack.attacks.AttackResult`
    accumulated before the stuck round.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class DatasetError(KShellError):
    pass


class VersionMismatchError(DatasetError):
    def __init__(self, name: str, expected: dict, found: dict):
        self.name = name
        self.expected = expected
        self.found = found
        diffs = ", ".join(
            f"{k}: expected {expected[k]}, found {found[k]}"
            for k in expected
            if expected[k] != found[k]
        )
        super().__init__(f"dataset {name!r} does not match its reference statistics ({diffs})")
