"""Central characters of the twisted sector attached to ``L-``.

The center of ``L-hat / K`` is generated by ``-1`` and by ``e^z`` for ``z`` running over
``Z = {z in L- : (z | L-) even}`` modulo ``2 L-``. In the quotient,
``e^{2 gamma} = eta(gamma)``, so ``chi(e^z)^2 = (-1)^{|z|^2 / 2} eta(z)`` is forced. That
value may be ``-1``, so character values are fourth roots of unity. They are stored as
exponents ``k`` mod 4, standing for ``i^k``.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Tuple, Union

import numpy as np
from sympy import I, ImmutableMatrix

from orbifold_fusion.exceptions import NoCharacter, NotCentral, NotHalfLattice, SettingMismatch
from orbifold_fusion.lattice.sublattice import CosetVector, Sublattice, column, dual_quotient
from orbifold_fusion.linalg import gf2
from orbifold_fusion.signs.cocycle import Cocycle
from orbifold_fusion.signs.eta import EtaForm

logger = logging.getLogger(__name__)

Vector = Union[CosetVector, ImmutableMatrix]


def _vector(x: Vector) -> ImmutableMatrix:
    return x.vector if isinstance(x, CosetVector) else x


@dataclass(frozen=True, eq=False)
class CentralData(object):
    lattice: Sublattice
    cocycle: Cocycle
    eta: EtaForm
    generator_bits: Tuple[Tuple[int, ...], ...]
    generators: Tuple[ImmutableMatrix, ...]
    square_exponents: Tuple[int, ...]
    pair_exponents: np.ndarray
    cosets: Tuple[CosetVector, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def character_count(self) -> int:
        return 2 ** self.rank

    def central_bits(self, v: ImmutableMatrix) -> Tuple[int, ...]:
        """Coefficients of ``v`` on the generators modulo ``2 L-``."""
        coords = self.lattice.coordinates(v)
        if not self.lattice.in_span(v) or not all(x.is_integer for x in coords):
            raise NotCentral("%s is not a vector of %s" % (list(v), self.lattice.name))
        if not all(x.is_even for x in self.lattice.gram * coords):
            raise NotCentral("%s does not pair evenly with %s" % (list(v), self.lattice.name))
        parity = [int(x) % 2 for x in coords]
        coefficients = gf2.solve_least([list(r) for r in zip(*self.generator_bits)], parity, self.rank) \
            if self.rank else []
        if coefficients is None:
            raise NotCentral("%s is not in the central subgroup" % list(v))
        return tuple(coefficients)


@dataclass(frozen=True, eq=False)
class CentralCharacter(object):
    """Values ``i^k`` of a central character on the generators of ``Z``."""

    data: CentralData = field(repr=False)
    exponents: Tuple[int, ...]

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple(((e - s // 2) % 4) // 2 for e, s in zip(self.exponents, self.data.square_exponents))

    @property
    def name(self) -> str:
        return "chi" + "".join(str(b) for b in self.bits)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.bits

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentralCharacter):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __str__(self) -> str:
        return self.name


def central_data(lattice: Sublattice, cocycle: Cocycle, eta: EtaForm) -> CentralData:
    gram_rows = [[int(x) for x in row] for row in lattice.gram.tolist()]
    bits = gf2.nullspace(gram_rows, lattice.rank)
    generators = tuple(ImmutableMatrix(lattice.basis * column(b)) for b in bits)

    squares = []
    for z in generators:
        exponent = int(lattice.norm(z)) // 2 + eta.exponent(z)
        squares.append(2 * (exponent % 2))

    r = len(generators)
    pairs = np.zeros((r, r), dtype=np.int64)
    for k, l in itertools.combinations(range(r), 2):
        pairs[k, l] = cocycle.exponent(generators[k], generators[l])

    cosets = tuple(dual_quotient(lattice).elements())
    logger.debug("central subgroup of %s has %d generators", lattice.name, r)
    return CentralData(lattice, cocycle, eta, tuple(tuple(b) for b in bits), generators, tuple(squares), pairs, cosets)


def enumerate_characters(cd: CentralData) -> List[CentralCharacter]:
    """All central characters with ``chi(-1) = -1``, ordered by their choice bits.

    Each generator value is one of the two square roots of its forced square.
    """
    if any(s % 2 for s in cd.square_exponents):
        raise NoCharacter("forced squares must be +1 or -1")
    base = [s // 2 for s in cd.square_exponents]
    characters = []
    for choice in itertools.product((0, 1), repeat=cd.rank):
        exponents = tuple((b + 2 * t) % 4 for b, t in zip(base, choice))
        characters.append(CentralCharacter(cd, exponents))
    return characters


def char_exponent(chi: CentralCharacter, beta: Vector) -> int:
    """Exponent ``k`` with ``chi(e^beta) = i^k``."""
    cd = chi.data
    v = _vector(beta)
    coefficients = cd.central_bits(v)

    w = cd.lattice.zero()
    exponent = 0
    chosen = [k for k, a in enumerate(coefficients) if a]
    for k in chosen:
        w = w + cd.generators[k]
        exponent += chi.exponents[k]
    for k, l in itertools.combinations(chosen, 2):
        exponent += 2 * int(cd.pair_exponents[k, l])

    gamma = ImmutableMatrix((v - w) / 2)
    exponent += 2 * cd.eta.exponent(gamma)
    return exponent % 4


def char_eval(chi: CentralCharacter, beta: Vector):
    return I ** char_exponent(chi, beta)


def _check_same(chi: CentralCharacter, psi: CentralCharacter) -> None:
    if chi.data is not psi.data:
        raise SettingMismatch("characters belong to different central data")


def twist(chi: CentralCharacter, lam: Vector) -> CentralCharacter:
    """``chi^(lam)(e^z) = (-1)^{(lam | z)} chi(e^z)``."""
    cd = chi.data
    v = _vector(lam)
    exponents = tuple((e + 2 * int(cd.lattice.pair(v, z))) % 4 for e, z in zip(chi.exponents, cd.generators))
    return CentralCharacter(cd, exponents)


def prime(chi: CentralCharacter) -> CentralCharacter:
    """``chi'(e^z) = (-1)^{|z|^2 / 2} chi(e^z)``, the character of the contragredient."""
    cd = chi.data
    exponents = tuple((e + int(cd.lattice.norm(z))) % 4 for e, z in zip(chi.exponents, cd.generators))
    return CentralCharacter(cd, exponents)


def c_chi(chi: CentralCharacter, lam: Vector) -> int:
    """``(-1)^{(lam | 2 lam)} eps(lam, 2 lam) chi(e^{2 lam})`` as a sign.

    With a bimultiplicative extension ``eps(lam, 2 lam) = 1``. When ``chi(e^{2 lam})`` is
    imaginary the extension to the dual contributes ``i^-1``, which rounds the exponent
    down to the even value below it.
    """
    cd = chi.data
    v = _vector(lam)
    if not cd.lattice.contains(2 * v):
        raise NotHalfLattice("2 * %s is not in %s" % (list(v), cd.lattice.name))
    m = int(2 * cd.lattice.norm(v))
    exponent = (2 * m + char_exponent(chi, 2 * v)) % 4
    return -1 if exponent // 2 else 1


def solve_char_equation(chi: CentralCharacter, psi: CentralCharacter) -> List[CosetVector]:
    """All ``mu + L-`` in ``L-* / L-`` with ``chi^(mu) = psi``."""
    _check_same(chi, psi)
    return [mu for mu in chi.data.cosets if twist(chi, mu) == psi]


def doubled_dual(cd: CentralData) -> List[CosetVector]:
    """``(2 L-* + L-) / L-``, the stabilizer predicted from the dual lattice alone."""
    return sorted({cd.lattice.reduce(2 * mu.vector) for mu in cd.cosets}, key=lambda c: c.sort_key)


def stabilizer_agrees(cd: CentralData) -> bool:
    characters = enumerate_characters(cd)
    return set(solve_char_equation(characters[0], characters[0])) == set(doubled_dual(cd))
