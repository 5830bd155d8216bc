import logging
from functools import cached_property
from typing import Dict, List

from orbifold_fusion.exceptions import BadLabel
from orbifold_fusion.lattice.cosets import (
    LambdaClasses,
    compute_M,
    lambda_classes,
    partner,
    plus_dual_in_core,
    transversal,
)
from orbifold_fusion.lattice.setting import OrbifoldSetting
from orbifold_fusion.lattice.sublattice import CosetVector, QuotientGroup, dual_quotient
from orbifold_fusion.signs.cocycle import Cocycle, build_cocycle
from orbifold_fusion.signs.eta import EtaForm, build_eta
from orbifold_fusion.twisted.characters import CentralCharacter, CentralData, central_data, enumerate_characters

logger = logging.getLogger(__name__)


class Orbifold(object):
    """A validated setting together with every structure derived from it.

    Structures are built on first access and cached on the instance. Instances are
    picklable, so they can be shipped to worker processes.
    """

    def __init__(self, setting: OrbifoldSetting) -> None:
        self.setting = setting
        self._partners: Dict[CosetVector, CosetVector] = {}

    @property
    def name(self) -> str:
        return self.setting.name

    @cached_property
    def cocycle(self) -> Cocycle:
        return build_cocycle(self.setting.Qbar)

    @cached_property
    def eta(self) -> EtaForm:
        return build_eta(self.setting, self.cocycle)

    @cached_property
    def central(self) -> CentralData:
        return central_data(self.setting.L_minus, self.cocycle, self.eta)

    @cached_property
    def characters(self) -> List[CentralCharacter]:
        return enumerate_characters(self.central)

    @cached_property
    def transversal(self) -> List[CosetVector]:
        return transversal(self.setting)

    @cached_property
    def M(self) -> QuotientGroup:
        return compute_M(self.setting)

    @cached_property
    def discriminant(self) -> QuotientGroup:
        return dual_quotient(self.setting.Q)

    @cached_property
    def plus_discriminant(self) -> QuotientGroup:
        return dual_quotient(self.setting.L_plus)

    @cached_property
    def minus_discriminant(self) -> QuotientGroup:
        return dual_quotient(self.setting.L_minus)

    @cached_property
    def core_discriminant(self) -> QuotientGroup:
        return dual_quotient(self.setting.Qbar)

    @cached_property
    def plus_cosets(self) -> List[CosetVector]:
        return self.plus_discriminant.elements()

    @cached_property
    def minus_cosets(self) -> List[CosetVector]:
        return list(self.central.cosets)

    @cached_property
    def plus_in_core(self) -> List[CosetVector]:
        return plus_dual_in_core(self.setting)

    @cached_property
    def lambda_classes(self) -> LambdaClasses:
        return lambda_classes(self.setting)

    @cached_property
    def r_sigma(self):
        from orbifold_fusion.fusion.qdim import compute_R_sigma

        return compute_R_sigma(self)

    def partner(self, mu: CosetVector) -> CosetVector:
        if mu not in self._partners:
            self._partners[mu] = partner(self.setting, self.transversal, mu)
        return self._partners[mu]

    def character(self, name: str) -> CentralCharacter:
        for chi in self.characters:
            if chi.name == name:
                return chi
        raise BadLabel("unknown central character %r, expected one of %s" % (name, [c.name for c in self.characters]))

    def reduce_plus(self, v) -> CosetVector:
        return self.setting.L_plus.reduce(v)

    def reduce_minus(self, v) -> CosetVector:
        return self.setting.L_minus.reduce(v)

    def in_core_dual(self, lam: CosetVector, mu: CosetVector) -> bool:
        return self.setting.Qbar.pairs_integrally(lam.vector + mu.vector)

    def __repr__(self) -> str:
        return "Orbifold(%s)" % self.setting.name
