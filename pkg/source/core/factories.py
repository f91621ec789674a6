from typing import List

from sympy import isprime
from sympy.polys.domains import QQ, GF

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class FieldFactory:
    """
    Factory class for getting the exact coefficient domain of a computation
    from its label: "q" for the rationals, "p<prime>" for a prime field.
    """
    _labels = {
        "q": "rational numbers",
        "p<prime>": "integers modulo a prime, e.g. p2, p3, p101",
    }

    @classmethod
    def labels(cls) -> List[str]:
        return sorted(set(cls._labels.keys()), reverse=True)

    @classmethod
    def default(cls) -> str:
        return cls.labels()[0]

    @classmethod
    def characteristic(cls, label: str) -> int:
        """
        Characteristic of the field named by label.

        :param label: "q" or "p" followed by a prime number.
        :return: 0 for "q", otherwise the prime.
        """
        label = label.strip().lower()
        if label == "q":
            return 0
        if label.startswith("p") and label[1:].isdigit():
            prime = int(label[1:])
            if isprime(prime):
                return prime
        raise ValueError(
            "Field {} not valid, characteristic must be 0 or prime. Choices "
            "are {}".format(label, ", ".join(cls.labels()))
        )

    @classmethod
    def new_domain(cls, label: str):
        """
        Factory method for the sympy domain used by DomainMatrix.

        :param label: A valid field label.
        :return: QQ or GF(p).
        """
        prime = cls.characteristic(label)
        if prime == 0:
            return QQ
        return GF(prime)
