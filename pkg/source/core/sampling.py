"""
Seeded generation of small exact rational points for the oracle
cross-checks. The same seed always yields the same sequence of points.
"""

from fractions import Fraction
from typing import List, Union

import numpy as np

from core.jump_loci import SubspaceComponent, TorusComponent, FullComponent
from core.utilities.type_aliases import QVector

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class RationalSampler:
    def __init__(self, seed: int, max_numerator: int = 7,
                 max_denominator: int = 4):
        self.__seed = seed
        self.__rng = np.random.default_rng(seed)
        self.__max_numerator = max_numerator
        self.__max_denominator = max_denominator

    @property
    def seed(self) -> int:
        return self.__seed

    def rational(self, nonzero: bool = True,
                 avoid_one: bool = False) -> Fraction:
        while True:
            numerator = int(self.__rng.integers(-self.__max_numerator,
                                                self.__max_numerator + 1))
            denominator = int(self.__rng.integers(1,
                                                  self.__max_denominator + 1))
            value = Fraction(numerator, denominator)
            if nonzero and value == 0:
                continue
            if avoid_one and value == 1:
                continue
            return value

    def distinct(self, size: int, avoid_one: bool = False) -> List[Fraction]:
        """
        size pairwise distinct nonzero rationals.
        """
        values = []
        while len(values) < size:
            value = self.rational(True, avoid_one)
            if value not in values:
                values.append(value)
        return values

    def resonance_point(self, component: Union[SubspaceComponent,
                                               FullComponent]) -> QVector:
        """
        A nonzero point of the component: a combination of its basis with
        nonzero coefficients.
        """
        if isinstance(component, FullComponent):
            return tuple(self.distinct(component.ambient_dimension))
        point = [Fraction(0)] * component.ambient_dimension
        for vector in component.basis:
            coefficient = self.rational()
            point = [x + coefficient * y for x, y in zip(point, vector)]
        if all(x == 0 for x in point):
            return self.resonance_point(component)
        return tuple(point)

    def generic_vector(self, dimension: int) -> QVector:
        return tuple(self.distinct(dimension))

    def character_point(self, component: Union[TorusComponent,
                                               FullComponent]) -> QVector:
        """
        A character of the component other than the identity.
        """
        if isinstance(component, FullComponent):
            return tuple(self.distinct(component.ambient_dimension, True))
        point = component.point(self.distinct(component.dimension, True))
        if all(x == 1 for x in point):
            return self.character_point(component)
        return point

    def generic_character(self, dimension: int) -> QVector:
        return tuple(self.distinct(dimension, True))
