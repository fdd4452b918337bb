"""Shared oracle helpers, deliberately independent of the package internals.

binom_oracle recomputes the kernel through an exact falling-factorial ratio
instead of the package's running-product table, so agreement between the two
is a real cross-check rather than the same code run twice.
"""

import math
import random
from fractions import Fraction

from fracdiff import LEFT, RIGHT, GridFunction


def binom_oracle(alpha: Fraction, k: int) -> Fraction:
    """C(alpha + k - 1, k) via (alpha+k-1)(alpha+k-2)...(alpha) / k!."""
    num = Fraction(1)
    for j in range(k):
        num *= alpha + k - 1 - j
    return num / math.factorial(k)


def rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 20))


def rand_left(rng: random.Random, base, count: int) -> GridFunction:
    return GridFunction(base, LEFT, [rand_fraction(rng) for _ in range(count)])


def rand_right(rng: random.Random, base, count: int) -> GridFunction:
    return GridFunction(base, RIGHT, [rand_fraction(rng) for _ in range(count)])
