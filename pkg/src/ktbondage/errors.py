"""Exception types shared across the package."""


class BondageError(Exception):
    """Base class for every error raised by ktbondage."""


class MissingEdge(BondageError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}) is not in the graph")
        self.u = u
        self.v = v


class IsolatedVertex(BondageError):
    def __init__(self, v: int):
        super().__init__(f"vertex {v} is isolated; total domination is undefined")
        self.v = v


class BadParam(BondageError, ValueError):
    """A parameter falls outside the hypothesis or range of an operation."""


class ParseError(BondageError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InvalidVertexIndex(ParseError):
    pass


class NotATDSet(BondageError, ValueError):
    pass


class ExceedsSearchBudget(BondageError):
    """The exact search would exceed its configured budget."""
