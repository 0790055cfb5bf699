import math
from typing import Iterable


class ExactAccumulator:
    """
    Running sum kept as non-overlapping float partials (Shewchuk), so it holds the exact real value
    of everything added. value() rounds it once with math.fsum, which gives the same bits as
    math.fsum over the original addends.
    """

    def __init__(self, values: Iterable[float] = ()):
        self._partials = []
        for value in values:
            self.add(value)

    def add(self, x: float):
        partials = []
        for y in self._partials:
            if abs(x) < abs(y):
                x, y = y, x
            high = x + y
            low = y - (high - x)
            if low:
                partials.append(low)
            x = high
        partials.append(x)
        self._partials = partials

    def value(self) -> float:
        return math.fsum(self._partials)
