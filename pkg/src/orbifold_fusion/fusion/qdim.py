"""Quantum dimensions.

Untwisted modules have quantum dimension 2 (type 1) or 1 (type 2). Every twisted module
has ``qdim^2 = 2 |R| - |R & M|``, where ``R`` is the set of sigma-orbits of solutions of
``chi^(mu) = chi``. Values are kept as exact squares.
"""
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, List, Tuple

from sympy import sqrt

from orbifold_fusion.catalog.labels import ModuleLabel, TwistedLabel, Type1Label
from orbifold_fusion.lattice.sublattice import CosetVector
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import solve_char_equation


@dataclass(frozen=True)
class QDim(object):
    square: int

    @property
    def value(self):
        return sqrt(self.square)

    def __str__(self) -> str:
        root = isqrt(self.square)
        return str(root) if root * root == self.square else "sqrt(%d)" % self.square


@dataclass(frozen=True)
class RSigma(object):
    orbits: Tuple[Tuple[CosetVector, ...], ...]
    m_count: int

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def twisted_square(self) -> int:
        return 2 * self.orbit_count - self.m_count


def sigma_orbits(orb: Orbifold, cosets: Iterable[CosetVector]) -> List[Tuple[CosetVector, ...]]:
    lattice = orb.setting.L_minus
    orbits = []
    seen = set()
    for mu in cosets:
        if mu in seen:
            continue
        orbit = tuple(sorted({mu, lattice.negate(mu)}, key=lambda c: c.sort_key))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def compute_R_sigma(orb: Orbifold) -> RSigma:
    chi = orb.characters[0]
    orbits = sigma_orbits(orb, solve_char_equation(chi, chi))
    m_count = sum(1 for o in orbits if orb.setting.L_minus.twice_in(o[0]))
    return RSigma(tuple(orbits), m_count)


def qdim(orb: Orbifold, x: ModuleLabel) -> QDim:
    if isinstance(x, TwistedLabel):
        return QDim(orb.r_sigma.twisted_square)
    if isinstance(x, Type1Label):
        return QDim(4)
    return QDim(1)


def global_dimension(orb: Orbifold, representatives: Iterable[ModuleLabel]) -> int:
    return sum(qdim(orb, x).square for x in representatives)


def sigma_fixed_discriminant(orb: Orbifold) -> int:
    """Number of classes of ``Qbar* / Qbar`` fixed by sigma."""
    s = orb.setting
    return sum(1 for v in orb.core_discriminant.elements() if s.Qbar.reduce(s.sigma * v.vector) == v)
