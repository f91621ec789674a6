"""
Exact linear algebra helpers. Every rank used by the toolbox goes through
sympy's DomainMatrix over the rationals or a prime field; elimination_rank is
a separately written Gaussian elimination kept as an independent check.
"""

from fractions import Fraction
from typing import Sequence, List, Optional, Union

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from core.utilities.type_aliases import QVector

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

Number = Union[int, Fraction]


def _element(domain, value: Number):
    if isinstance(value, Fraction):
        return domain.convert(value.numerator) / \
               domain.convert(value.denominator)
    return domain.convert(value)


def domain_matrix(rows: Sequence[Sequence[Number]], ncols: int,
                  domain=QQ) -> DomainMatrix:
    """
    Builds a DomainMatrix from a list of rows of integers or Fractions.

    :param rows: The rows of the matrix, each of length ncols.
    :param ncols: Number of columns, needed when rows is empty.
    :param domain: A sympy domain, QQ or GF(p).
    :return: The corresponding DomainMatrix.
    """
    elements = []
    for row in rows:
        if len(row) != ncols:
            raise ValueError("Row of length {} in a matrix with {} columns"
                             .format(len(row), ncols))
        elements.append([_element(domain, value) for value in row])
    return DomainMatrix(elements, (len(elements), ncols), domain)


def rank(rows: Sequence[Sequence[Number]], ncols: int, domain=QQ) -> int:
    if len(rows) == 0 or ncols == 0:
        return 0
    return domain_matrix(rows, ncols, domain).rank()


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> List[QVector]:
    """
    Basis of {x : Mx = 0} over the rationals, read off the reduced row echelon
    form. One vector per free column, with a 1 in that column.
    """
    if len(rows) == 0:
        return [tuple(Fraction(int(i == j)) for j in range(0, ncols))
                for i in range(0, ncols)]
    reduced, pivots = domain_matrix(rows, ncols, QQ).rref()
    entries = reduced.to_Matrix()
    free_columns = [j for j in range(0, ncols) if j not in pivots]
    basis = []
    for free in free_columns:
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in enumerate(pivots):
            vector[pivot] = -_to_fraction(entries[row, free])
        basis.append(tuple(vector))
    return basis


def elimination_rank(rows: Sequence[Sequence[Number]], ncols: int,
                     prime: Optional[int] = None) -> int:
    """
    Rank by plain Gaussian elimination on Fractions (or integers mod prime).
    Columns are scanned from the last one backwards and the pivot is the row
    with the largest absolute entry, so the elimination order differs from
    DomainMatrix.rank.
    """
    if prime is None:
        work = [[Fraction(value) for value in row] for row in rows]
    else:
        work = [[int(value) % prime if not isinstance(value, Fraction)
                 else value.numerator * pow(value.denominator, prime - 2,
                                            prime) % prime
                 for value in row] for row in rows]
    found = 0
    for column in range(ncols - 1, -1, -1):
        candidates = [r for r in range(found, len(work)) if work[r][column]]
        if not candidates:
            continue
        pivot = max(candidates, key=lambda r: abs(work[r][column]))
        work[found], work[pivot] = work[pivot], work[found]
        head = work[found]
        for r in range(found + 1, len(work)):
            if not work[r][column]:
                continue
            if prime is None:
                factor = work[r][column] / head[column]
                work[r] = [a - factor * b for a, b in zip(work[r], head)]
            else:
                factor = work[r][column] * pow(head[column], prime - 2, prime)
                work[r] = [(a - factor * b) % prime
                           for a, b in zip(work[r], head)]
        found += 1
    return found


def integer_invariant_factors(rows: Sequence[Sequence[int]],
                              ncols: int) -> List[int]:
    """
    Nonzero invariant factors of an integer matrix, in divisibility order.
    """
    if len(rows) == 0 or ncols == 0:
        return []
    factors = invariant_factors(Matrix(rows), domain=ZZ)
    return [abs(int(factor)) for factor in factors if int(factor) != 0]
