from typing import Optional

__all__ = [
    'CutenumError',
    'GraphParseError',
    'DomainError',
    'DisconnectedGraphError',
    'WeightOverflowError',
    'BudgetExceededError',
    'InternalInvariantError'
    ]


class CutenumError(Exception):
    ''' Base class for all errors raised by the package '''


class GraphParseError(CutenumError, ValueError):
    ''' Raised when a graph file does not follow the edge-list format.

    Args:
        message (str): what went wrong
        line (int, optional): 1-based line number of the offending line.
            Defaults to None.
    '''

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.message = message
        self.line = line
        text = message if line is None else f'line {line}: {message}'
        super(GraphParseError, self).__init__(text)


class DomainError(CutenumError, ValueError):
    ''' Raised when arguments fall outside an operation's domain '''


class DisconnectedGraphError(DomainError):
    ''' Raised when an operation requires a connected graph '''


class WeightOverflowError(CutenumError, ArithmeticError):
    ''' Raised when an integer weight exceeds the supported width '''


class BudgetExceededError(CutenumError):
    ''' Raised when a terminal-pair scan would exceed the pair budget 

    Args:
        pairs (int): number of pairs the scan would visit
        budget (int): configured limit
    '''

    def __init__(self, pairs: int, budget: int) -> None:
        self.pairs = pairs
        self.budget = budget
        super(BudgetExceededError, self).__init__(
            f'scan needs {pairs} terminal pairs, over the budget of {budget} '
            '(use force to override)')


class InternalInvariantError(CutenumError, AssertionError):
    ''' Raised when a property guaranteed by construction fails at runtime '''
