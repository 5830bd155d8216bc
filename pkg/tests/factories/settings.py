from functools import lru_cache
from typing import Sequence

from sympy import ImmutableMatrix, Rational

from orbifold_fusion.data.builders import build_example
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import CentralCharacter, char_exponent


@lru_cache(maxsize=None)
def orbifold(builder: str) -> Orbifold:
    return Orbifold(build_example(builder).setting())


def a2_double() -> Orbifold:
    return orbifold("a2-double")


def vector(*values) -> ImmutableMatrix:
    return ImmutableMatrix(len(values), 1, [Rational(v) for v in values])


def a2_betas() -> Sequence[ImmutableMatrix]:
    """``beta^i = alpha^i - sigma alpha^i`` in ``A2 + A2``."""
    return vector(1, 0, -1, 0), vector(0, 1, 0, -1)


def a2_rhos() -> Sequence[ImmutableMatrix]:
    """Generators ``rho^1 = (beta^1 + 2 beta^2) / 6`` and ``rho^2 = (2 beta^1 + beta^2) / 6`` of ``L-*``."""
    b1, b2 = a2_betas()
    return (b1 + 2 * b2) / 6, (2 * b1 + b2) / 6


def a2_character(orb: Orbifold, i: int, j: int) -> CentralCharacter:
    """The character with ``chi_ij(e^{c1 beta^1 + c2 beta^2}) = (-1)^{c1 j + c2 i}``."""
    b1, b2 = a2_betas()
    for chi in orb.characters:
        if char_exponent(chi, b1) == 2 * j and char_exponent(chi, b2) == 2 * i:
            return chi
    raise LookupError("no character chi_%d%d" % (i, j))
