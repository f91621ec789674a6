from fractions import Fraction
from unittest import TestCase

import numpy as np
from sympy.polys.domains import GF

from core.utilities.linalg import rank, nullspace, elimination_rank, \
    integer_invariant_factors

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class TestRank(TestCase):
    def setUp(self):
        # the boundary of a triangle, rank 2 over every field
        self.boundary = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]

    def test_RationalRank(self):
        self.assertEqual(2, rank(self.boundary, 3))

    def test_EmptyMatrix(self):
        self.assertEqual(0, rank([], 4))

    def test_RankDependsOnCharacteristic(self):
        matrix = [[2, 0], [0, 1]]
        expected = (2, 1)
        actual = (rank(matrix, 2), rank(matrix, 2, GF(2)))
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))

    def test_FractionEntries(self):
        matrix = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3), 2]]
        self.assertEqual(1, rank(matrix, 2))

    def test_RowLengthChecked(self):
        self.assertRaises(ValueError, rank, [[1, 2]], 3)

    def test_EliminationAgreesOnRandomMatrices(self):
        generator = np.random.default_rng(11)
        for _ in range(0, 30):
            rows, columns = generator.integers(1, 7, size=2)
            matrix = generator.integers(-2, 3, size=(rows, columns)).tolist()
            for prime in (None, 2, 3):
                domain = GF(prime) if prime is not None else None
                expected = rank(matrix, int(columns)) if domain is None \
                    else rank(matrix, int(columns), domain)
                actual = elimination_rank(matrix, int(columns), prime)
                self.assertEqual(expected, actual,
                                 "Expected\n{}\nbut actual\n{} for {}".format(
                                     expected, actual, matrix
                                 ))


class TestNullspace(TestCase):
    def test_VectorsAreInKernel(self):
        matrix = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        basis = nullspace(matrix, 3)
        self.assertEqual(1, len(basis))
        for vector in basis:
            for row in matrix:
                self.assertEqual(0, sum(a * b for a, b in zip(row, vector)))

    def test_NoRowsGiveIdentity(self):
        expected = [(1, 0), (0, 1)]
        actual = nullspace([], 2)
        self.assertEqual(expected, actual)


class TestInvariantFactors(TestCase):
    def test_TorsionOfProjectivePlaneBoundary(self):
        # d_2 of a complex with H_1 = Z/2: a single cell attached twice
        expected = [2]
        actual = integer_invariant_factors([[2]], 1)
        self.assertEqual(expected, actual)

    def test_ZeroFactorsDropped(self):
        expected = [1]
        actual = integer_invariant_factors([[1, 0], [0, 0]], 2)
        self.assertEqual(expected, actual,
                         "Expected\n{}\nbut actual\n{}".format(
                             expected, actual
                         ))
