"""
Exact polynomials and truncated power series, and the extraction of lower
central series ranks and Chen ranks from the clique and cut polynomials.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Sequence, Tuple, NamedTuple, Optional

from sympy import divisors
from sympy.ntheory import mobius

from core.graph_core import Graph, CutCoefficients, clique_counts, \
    cut_coefficients, is_connected
from core.utilities.errors import IdentityViolationError, GateError

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

MODES = ("raag", "bb")
DEFAULT_ORDER = 12


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError("Mode must be one of {}, not {}".format(MODES, mode))


class IntPolynomial:
    """
    Polynomial with integer coefficients, index = degree.
    """

    def __init__(self, coefficients: Sequence[int], truncated: bool = False):
        values = [int(value) for value in coefficients]
        while len(values) > 0 and values[-1] == 0:
            values.pop()
        self.__coefficients = tuple(values)
        self.__truncated = truncated

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return self.__coefficients

    @property
    def truncated(self) -> bool:
        return self.__truncated

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1
        return len(self.__coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.__coefficients):
            return self.__coefficients[k]
        return 0

    def at_negative(self) -> 'IntPolynomial':
        """
        P(-t).
        """
        return IntPolynomial(
            [value if k % 2 == 0 else -value
             for k, value in enumerate(self.__coefficients)],
            self.__truncated
        )

    def evaluate(self, t: int) -> int:
        total = 0
        for value in reversed(self.__coefficients):
            total = total * t + value
        return total

    def to_series(self, order: int) -> 'PowerSeries':
        return PowerSeries(self.__coefficients[:order], order)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and \
               other.coefficients == self.__coefficients

    def __hash__(self) -> int:
        return hash(self.__coefficients)

    def __str__(self) -> str:
        terms = []
        for k, value in enumerate(self.__coefficients):
            if value == 0:
                continue
            if k == 0:
                terms.append(str(value))
            elif k == 1:
                terms.append("{}*t".format(value))
            else:
                terms.append("{}*t^{}".format(value, k))
        return " + ".join(terms) if len(terms) > 0 else "0"

    __repr__ = __str__


class PowerSeries:
    """
    Power series with rational coefficients truncated at order N (exclusive):
    only the coefficients of t^0..t^(N-1) are meaningful. Binary operations
    keep the smaller order of the two operands.
    """

    def __init__(self, coefficients: Sequence, order: int):
        if order < 1:
            raise ValueError("Truncation order must be positive")
        values = [Fraction(value) for value in coefficients[:order]]
        values.extend([Fraction(0)] * (order - len(values)))
        self.__coefficients = tuple(values)
        self.__order = order

    @classmethod
    def one(cls, order: int) -> 'PowerSeries':
        return PowerSeries([1], order)

    @classmethod
    def geometric(cls, order: int) -> 'PowerSeries':
        """
        1 / (1 - t).
        """
        return PowerSeries([1] * order, order)

    @classmethod
    def binomial_power(cls, k: int, exponent: int,
                       order: int) -> 'PowerSeries':
        """
        (1 - t^k)^exponent for any integer exponent.
        """
        values = [Fraction(0)] * order
        term = Fraction(1)
        m = 0
        while k * m < order:
            values[k * m] = term
            term = -term * (exponent - m) / (m + 1)
            m += 1
        return PowerSeries(values, order)

    @property
    def order(self) -> int:
        return self.__order

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self.__coefficients

    def coefficient(self, k: int) -> Fraction:
        if k >= self.__order:
            raise IndexError("Coefficient {} beyond truncation order {}"
                             .format(k, self.__order))
        return self.__coefficients[k]

    def truncate(self, order: int) -> 'PowerSeries':
        return PowerSeries(self.__coefficients, min(order, self.__order))

    def __add__(self, other: 'PowerSeries') -> 'PowerSeries':
        order = min(self.__order, other.order)
        return PowerSeries([a + b for a, b in zip(
            self.__coefficients[:order], other.coefficients[:order]
        )], order)

    def __neg__(self) -> 'PowerSeries':
        return PowerSeries([-a for a in self.__coefficients], self.__order)

    def __sub__(self, other: 'PowerSeries') -> 'PowerSeries':
        return self + (-other)

    def __mul__(self, other) -> 'PowerSeries':
        if not isinstance(other, PowerSeries):
            factor = Fraction(other)
            return PowerSeries([a * factor for a in self.__coefficients],
                               self.__order)
        order = min(self.__order, other.order)
        values = [Fraction(0)] * order
        for i, a in enumerate(self.__coefficients[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients[:order - i]):
                values[i + j] += a * b
        return PowerSeries(values, order)

    __rmul__ = __mul__

    def inverse(self) -> 'PowerSeries':
        head = self.__coefficients[0]
        if head == 0:
            raise ZeroDivisionError("Series with zero constant term is not a "
                                    "unit")
        values = [Fraction(0)] * self.__order
        values[0] = 1 / head
        for k in range(1, self.__order):
            total = sum(self.__coefficients[i] * values[k - i]
                        for i in range(1, k + 1))
            values[k] = -total / head
        return PowerSeries(values, self.__order)

    def __truediv__(self, other: 'PowerSeries') -> 'PowerSeries':
        return self * other.inverse()

    def substitute_geometric(self) -> 'PowerSeries':
        """
        f(t / (1 - t)), exact because t / (1 - t) has no constant term.
        """
        shift = PowerSeries([0] + [1] * (self.__order - 1), self.__order)
        result = PowerSeries([self.__coefficients[-1]], self.__order)
        for value in reversed(self.__coefficients[:-1]):
            result = result * shift + PowerSeries([value], self.__order)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and \
               other.order == self.__order and \
               other.coefficients == self.__coefficients

    def __hash__(self) -> int:
        return hash((self.__coefficients, self.__order))

    def __str__(self) -> str:
        return "PowerSeries({}, O(t^{}))".format(
            [str(value) for value in self.__coefficients], self.__order
        )

    __repr__ = __str__


class RankVector(NamedTuple):
    """
    Ranks in degrees 1..len(values). group is raag or bb, kind is lcs or chen.
    """
    group: str
    kind: str
    values: Tuple[int, ...]
    truncated: bool = False

    def rank(self, k: int) -> int:
        return self.values[k - 1]


def clique_polynomial(g: Graph) -> IntPolynomial:
    return IntPolynomial(clique_counts(g))


def cut_polynomial(g: Graph, max_subset_size: Optional[int] = None,
                   workers: int = 1) -> IntPolynomial:
    cuts = cut_coefficients(g, max_subset_size, workers)
    return IntPolynomial((0, 0) + cuts.values, cuts.truncated)


def extract_lcs_ranks(series: PowerSeries, n_terms: int
                      ) -> Tuple[int, ...]:
    """
    Finds the exponents phi_k with prod_k (1 - t^k)^phi_k equal to series,
    dividing out one factor per degree.

    :param series: A series with constant term 1 and order > n_terms.
    :param n_terms: Number of ranks to extract.
    :return: phi_1..phi_n_terms.
    """
    if series.order <= n_terms:
        raise ValueError("Series of order {} cannot give {} ranks".format(
            series.order, n_terms
        ))
    if series.coefficient(0) != 1:
        raise IdentityViolationError(
            "Constant term {} is not 1".format(series.coefficient(0)), 0
        )
    residual = series
    ranks = []
    for k in range(1, n_terms + 1):
        value = -residual.coefficient(k)
        if value.denominator != 1 or value < 0:
            logging.getLogger(__name__).error(
                "Rank in degree {} is {}, identity violated".format(k, value)
            )
            raise IdentityViolationError(
                "Extracted rank {} in degree {} is not a nonnegative "
                "integer".format(value, k), k
            )
        phi = int(value)
        ranks.append(phi)
        residual = residual * PowerSeries.binomial_power(
            k, -phi, series.order
        )
    return tuple(ranks)


def rank_product_series(ranks: Sequence[int], order: int) -> PowerSeries:
    """
    prod_k (1 - t^k)^ranks[k-1], truncated at order.
    """
    product = PowerSeries.one(order)
    for k, phi in enumerate(ranks, start=1):
        product = product * PowerSeries.binomial_power(k, phi, order)
    return product


def lcs_ranks(p: IntPolynomial, mode: str, n_terms: int) -> RankVector:
    """
    LCS ranks from the clique polynomial: prod (1-t^k)^phi_k equals P(-t)
    for the right-angled Artin group and P(-t)/(1-t) for the Bestvina-Brady
    group of a connected graph.
    """
    _check_mode(mode)
    order = n_terms + 1
    series = p.at_negative().to_series(order)
    if mode == "bb":
        series = series * PowerSeries.geometric(order)
    return RankVector(mode, "lcs", extract_lcs_ranks(series, n_terms))


def chen_ranks(c: CutCoefficients, mode: str, n_terms: int) -> RankVector:
    """
    Chen ranks from the cut coefficients, using the closed form
    theta_k = sum_j c_j * C(k - 1, j - 1) of the substitution t -> t/(1-t).
    With truncated coefficients the vector stops at the cap.
    """
    _check_mode(mode)
    first = c.n_vertices - 1 if mode == "bb" else c.n_vertices
    last = n_terms
    if c.truncated:
        last = min(n_terms, c.max_size)
    values = [first]
    for k in range(2, last + 1):
        values.append(sum(c.coefficient(j) * comb(k - 1, j - 1)
                          for j in range(2, min(k, c.n_vertices) + 1)))
    return RankVector(mode, "chen", tuple(values[:n_terms]),
                      c.truncated and last < n_terms)


def chen_ranks_by_substitution(c: CutCoefficients, mode: str,
                               n_terms: int) -> RankVector:
    """
    Same as chen_ranks, evaluating Q(t / (1 - t)) as a power series.
    """
    _check_mode(mode)
    order = n_terms + 1
    cut = PowerSeries([0, 0] + list(c.values), order)
    substituted = cut.substitute_geometric()
    first = c.n_vertices - 1 if mode == "bb" else c.n_vertices
    values = [first] + [int(substituted.coefficient(k))
                        for k in range(2, order)]
    return RankVector(mode, "chen", tuple(values[:n_terms]), c.truncated)


def witt_ranks(n: int, n_terms: int) -> RankVector:
    """
    LCS ranks of the free group of rank n.
    """
    if n < 1:
        raise ValueError("Free group rank must be positive")
    values = []
    for k in range(1, n_terms + 1):
        total = sum(int(mobius(d)) * n ** (k // d) for d in divisors(k))
        values.append(total // k)
    return RankVector("raag", "lcs", tuple(values))


def free_chen_ranks(n: int, n_terms: int) -> RankVector:
    """
    Chen ranks of the free group of rank n: n, then (k-1) * C(n+k-2, k).
    """
    if n < 1:
        raise ValueError("Free group rank must be positive")
    values = [n] + [(k - 1) * comb(n + k - 2, k)
                    for k in range(2, n_terms + 1)]
    return RankVector("raag", "chen", tuple(values[:n_terms]))


def _require_connected(g: Graph, mode: str):
    if mode == "bb" and not is_connected(g):
        logging.getLogger(__name__).warning(
            "Bestvina-Brady ranks refused for a disconnected graph"
        )
        raise GateError("The graph is not connected, so the kernel is not "
                        "finitely generated", "disconnected")


def graph_lcs_ranks(g: Graph, mode: str, n_terms: int) -> RankVector:
    _require_connected(g, mode)
    return lcs_ranks(clique_polynomial(g), mode, n_terms)


def graph_chen_ranks(g: Graph, mode: str, n_terms: int,
                     max_subset_size: Optional[int] = None,
                     workers: int = 1) -> RankVector:
    _require_connected(g, mode)
    return chen_ranks(cut_coefficients(g, max_subset_size, workers), mode,
                      n_terms)
