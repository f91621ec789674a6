"""
Common type aliases used in the toolbox for improving readability.
"""

from fractions import Fraction
from typing import Tuple

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"

# vertex indices always refer to the fixed order of Graph.vertices
Edge = Tuple[int, int]
Triple = Tuple[int, int, int]
Simplex = Tuple[int, ...]
QVector = Tuple[Fraction, ...]
