"""Exception hierarchy shared by all modules."""


class BetaMatchError(Exception):
    pass


class ParseError(BetaMatchError, ValueError):
    def __init__(self, message: str, position: int = 0, line: int | None = None):
        where = f"line {line}, col {position}" if line is not None else f"position {position}"
        super().__init__(f"{message} at {where}")
        self.position = position
        self.line = line


class EmptyRuleSet(BetaMatchError, ValueError):
    pass


class SymbolOutOfRange(BetaMatchError, ValueError):
    pass


class DegenerateSystem(BetaMatchError, ValueError):
    pass


class RewriteError(BetaMatchError):
    pass


class PositionOutOfRange(RewriteError):
    pass


class RuleMismatch(RewriteError):
    pass


class ResourceLimit(BetaMatchError):
    pass


class StepOutOfRange(BetaMatchError, ValueError):
    pass


class InvalidWitness(BetaMatchError, ValueError):
    pass


class TypingError(BetaMatchError):
    """A term does not have the simple type it is required to have."""


class BudgetExceeded(BetaMatchError):
    pass


class NotNormal(BetaMatchError, ValueError):
    pass
