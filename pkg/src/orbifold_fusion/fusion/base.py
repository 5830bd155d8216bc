"""Fusion of the ``V_{L-}^sigma`` modules and the projection onto them.

Forgetting ``lambda`` sends every orbifold label to a label of the smaller orbifold on
``L-``: type 1 to a paired module ``V_mu``, type 2 to ``V_mu^eps``, and a twisted module
to ``T_chi^eps``. The orbifold product must project onto ``base_fuse`` term by term.
"""
from collections import Counter
from dataclasses import dataclass
from typing import List, Union

from orbifold_fusion.catalog.labels import ModuleLabel, TwistedLabel, Type1Label, fold
from orbifold_fusion.fusion.qdim import sigma_orbits
from orbifold_fusion.lattice.sublattice import CosetVector
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.signs.cocycle import pi_sign, sign
from orbifold_fusion.twisted.characters import CentralCharacter, c_chi, prime, solve_char_equation, twist


@dataclass(frozen=True)
class BasePaired(object):
    mu: CosetVector

    order = 0

    @property
    def sort_key(self) -> tuple:
        return self.order, self.mu.sort_key, 0


@dataclass(frozen=True)
class BaseSigned(object):
    mu: CosetVector
    sign: int

    order = 1

    @property
    def sort_key(self) -> tuple:
        return self.order, self.mu.sort_key, self.sign


@dataclass(frozen=True)
class BaseTwisted(object):
    character: CentralCharacter
    sign: int

    order = 2

    @property
    def sort_key(self) -> tuple:
        return self.order, self.character.sort_key, self.sign


BaseLabel = Union[BasePaired, BaseSigned, BaseTwisted]


def project(label: ModuleLabel) -> BaseLabel:
    if isinstance(label, TwistedLabel):
        return BaseTwisted(label.character, label.sign)
    if isinstance(label, Type1Label):
        return BasePaired(label.mu)
    return BaseSigned(label.mu, label.sign)


def _untwisted(orb: Orbifold, mu: CosetVector) -> List[BaseLabel]:
    if orb.setting.L_minus.twice_in(mu):
        return [BaseSigned(mu, 1), BaseSigned(mu, -1)]
    return [BasePaired(fold(orb, mu))]


def base_fuse(orb: Orbifold, x: BaseLabel, y: BaseLabel) -> Counter:
    lattice = orb.setting.L_minus
    x, y = sorted((x, y), key=lambda z: z.sort_key)
    if isinstance(y, BaseTwisted):
        if isinstance(x, BaseTwisted):
            terms = []
            for orbit in sigma_orbits(orb, solve_char_equation(x.character, prime(y.character))):
                mu = orbit[0]
                if lattice.twice_in(mu):
                    flip = sign(int(2 * lattice.norm(mu.vector)))
                    terms.append(BaseSigned(mu, x.sign * y.sign * c_chi(x.character, mu) * flip))
                else:
                    terms.append(BasePaired(mu))
            return Counter(terms)
        chi = twist(y.character, x.mu)
        if isinstance(x, BasePaired):
            return Counter([BaseTwisted(chi, 1), BaseTwisted(chi, -1)])
        return Counter([BaseTwisted(chi, c_chi(y.character, x.mu) * x.sign * y.sign)])
    if isinstance(x, BasePaired) and isinstance(y, BasePaired):
        return Counter(_untwisted(orb, lattice.add(x.mu, y.mu)) + _untwisted(orb, lattice.subtract(x.mu, y.mu)))
    if isinstance(x, BasePaired):
        return Counter([BasePaired(fold(orb, lattice.add(x.mu, y.mu)))])
    product_sign = x.sign * y.sign * pi_sign(lattice, x.mu, 2 * y.mu.vector)
    return Counter([BaseSigned(lattice.add(x.mu, y.mu), product_sign)])


def projected_product(labels: Counter) -> Counter:
    projected = Counter()
    for label, multiplicity in labels.items():
        projected[project(label)] += multiplicity
    return projected
