"""Exception hierarchy shared by all modules."""


class GameError(ValueError):
    """Base class for invalid-input conditions."""


class EmptySuccessorList(GameError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no successor")
        self.vertex = vertex


class DanglingEdge(GameError):
    def __init__(self, vertex, target):
        super().__init__(f"edge {vertex} -> {target} points outside the game")
        self.vertex = vertex
        self.target = target


class NotTotal(GameError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} loses all successors in the restriction")
        self.vertex = vertex


class EmptySet(GameError):
    pass


class DomainMismatch(GameError):
    pass


class PositionOutOfRange(GameError):
    pass


class TopMeasure(GameError):
    pass


class EvenPosition(GameError):
    pass


class NotASuccessor(GameError):
    pass


class BaseNotInContext(GameError):
    pass


class BaseViolatesGuard(GameError):
    pass


class GameTooLarge(GameError):
    pass


class InvalidLasso(GameError):
    pass


class ParseError(GameError):
    """Syntax error in a game or solution file; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
