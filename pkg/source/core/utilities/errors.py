"""
Exceptions raised by the toolbox. The terminal front end turns each family
into its own exit code.
"""

from typing import Optional, Sequence

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class IdentityViolationError(ArithmeticError):
    """
    An extracted rank is negative or not an integer: the generating function
    identity it came from does not hold for the input.
    """

    def __init__(self, message: str, degree: int):
        super(IdentityViolationError, self).__init__(message)
        self.degree = degree


class ChainComplexError(ArithmeticError):
    pass


class GateError(RuntimeError):
    """
    Raised when a computation needs a hypothesis on the graph (connectivity,
    simply connected flag complex) that is false or could not be decided.
    """

    def __init__(self, message: str, status: str):
        super(GateError, self).__init__(message)
        self.status = status


class TrivialCharacterError(ValueError):
    pass


class OracleDisagreementError(RuntimeError):
    def __init__(self, message: str, point: Sequence, check: str):
        super(OracleDisagreementError, self).__init__(message)
        self.point = tuple(point)
        self.check = check


class GraphDocumentError(ValueError):
    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        super(GraphDocumentError, self).__init__(message)
        self.field = field
        self.line = line
        self.column = column


class TriangulationError(ValueError):
    def __init__(self, message: str, step: Optional[int] = None):
        super(TriangulationError, self).__init__(message)
        self.step = step
