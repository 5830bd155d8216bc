"""Grouping of labels into isomorphism classes.

In paper mode every signed label is its own class. In canonical mode two labels are
merged when they describe the same module after shifting by an element ``gamma`` of the
transversal ``Qbar / L``:

* type 1: ``(lambda, mu)`` is determined by ``lambda + mu`` and ``lambda - mu`` mod ``Qbar``
  up to ``sigma``;
* type 2: the class of ``nu = lambda + mu`` mod ``Qbar`` plus a sign transported to the
  least pair with the same ``nu``, picking up ``eta(gamma)``;
* twisted: the lambda class and the least pair ``(offset, chi)`` of the orbit under
  ``(offset, chi) -> (offset + gamma+ - lambda0(gamma-), chi^(gamma-))``, with the sign
  transported by ``eta(gamma) c_chi0(gamma-)``. When ``(pi+ Qbar)* & pi+ Qbar`` is ``L+``
  every offset is zero and only the character moves.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Sequence, Tuple

from orbifold_fusion.catalog.labels import ModuleLabel, TwistedLabel, Type1Label, Type2Label
from orbifold_fusion.exceptions import BadLabel, VerificationFailure
from orbifold_fusion.lattice.sublattice import CosetVector
from orbifold_fusion.meta_config import LabelMode
from orbifold_fusion.orbifold import Orbifold
from orbifold_fusion.twisted.characters import CentralCharacter, c_chi, twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalencePolicy(object):
    mode: LabelMode = LabelMode.PAPER


@dataclass(frozen=True)
class LabelClass(object):
    key: Hashable
    representative: ModuleLabel
    members: Tuple[ModuleLabel, ...]

    @property
    def kind(self):
        return self.representative.kind


class CanonicalIndex(object):
    """Class keys of the canonical mode."""

    def __init__(self, orb: Orbifold, labels: Sequence[ModuleLabel]) -> None:
        self.orb = orb
        s = orb.setting
        self._shifts = []
        for gamma in orb.transversal:
            plus, minus = s.plus_part(gamma.vector), s.minus_part(gamma.vector)
            drift = plus - orb.partner(s.L_minus.reduce(minus)).vector
            self._shifts.append((gamma, plus, minus, drift))
        self._base: Dict[CosetVector, Tuple[CosetVector, CosetVector]] = {}
        for label in sorted((x for x in labels if isinstance(x, Type2Label)), key=lambda x: x.sort_key):
            self._base.setdefault(self.nu(label.lam, label.mu), (label.lam, label.mu))

    def nu(self, lam: CosetVector, mu: CosetVector) -> CosetVector:
        return self.orb.setting.Qbar.reduce(lam.vector + mu.vector)

    def _type1_key(self, label: Type1Label) -> tuple:
        s = self.orb.setting
        nus = (self.nu(label.lam, label.mu), s.Qbar.reduce(label.lam.vector - label.mu.vector))
        return label.kind.value, min(n.sort_key for n in nus)

    def _type2_key(self, label: Type2Label) -> tuple:
        s = self.orb.setting
        nu = self.nu(label.lam, label.mu)
        if nu not in self._base:
            raise BadLabel("no type 2 label with lambda + mu = %s" % nu)
        lam, mu = self._base[nu]
        for gamma, plus, minus, _ in self._shifts:
            if s.L_plus.reduce(lam.vector + plus) == label.lam and s.L_minus.reduce(mu.vector + minus) == label.mu:
                return label.kind.value, nu.sort_key, label.sign * self.orb.eta(gamma.vector)
        raise VerificationFailure("no shift relates %s to its base pair" % (label,))

    def _moves(self, offset: CosetVector, chi: CentralCharacter):
        for gamma, _, minus, drift in self._shifts:
            yield gamma, minus, self.orb.reduce_plus(offset.vector + drift), twist(chi, minus)

    def orbit_minimum(self, offset: CosetVector, chi: CentralCharacter) -> Tuple[CosetVector, CentralCharacter]:
        images = ((o, c) for _, _, o, c in self._moves(offset, chi))
        return min(images, key=lambda x: (x[0].sort_key, x[1].sort_key))

    def _twisted_key(self, label: TwistedLabel) -> tuple:
        offset = label.offset if label.offset is not None else self.orb.reduce_plus(self.orb.setting.L_plus.zero())
        base, chi0 = self.orbit_minimum(offset, label.character)
        for gamma, minus, o, c in self._moves(base, chi0):
            if o == offset and c == label.character:
                transported = label.sign * self.orb.eta(gamma.vector) * c_chi(chi0, minus)
                return label.kind.value, label.lam_index, base.sort_key, chi0.sort_key, transported
        raise VerificationFailure("%s is not in the orbit of (%s, %s)" % (label, base, chi0))

    def key(self, label: ModuleLabel) -> tuple:
        if isinstance(label, TwistedLabel):
            return self._twisted_key(label)
        if isinstance(label, Type1Label):
            return self._type1_key(label)
        return self._type2_key(label)


class Classifier(object):
    """Maps labels to classes under a policy."""

    def __init__(self, orb: Orbifold, labels: Sequence[ModuleLabel], policy: EquivalencePolicy) -> None:
        self.orb = orb
        self.policy = policy
        self._canonical = CanonicalIndex(orb, labels) if policy.mode == LabelMode.CANONICAL else None

        grouped: Dict[Hashable, List[ModuleLabel]] = {}
        for label in labels:
            grouped.setdefault(self.key(label), []).append(label)
        classes = [
            LabelClass(key, min(members, key=lambda x: x.sort_key), tuple(sorted(members, key=lambda x: x.sort_key)))
            for key, members in grouped.items()
        ]
        self.classes: List[LabelClass] = sorted(classes, key=lambda c: c.representative.sort_key)
        self._index = {c.key: i for i, c in enumerate(self.classes)}
        logger.info("%d labels form %d classes in %s mode", len(labels), len(self.classes), policy.mode.name.lower())

    def key(self, label: ModuleLabel) -> Hashable:
        if self._canonical is None:
            return label.sort_key
        return self._canonical.key(label)

    def index_of(self, label: ModuleLabel) -> int:
        key = self.key(label)
        if key not in self._index:
            raise VerificationFailure("fusion produced %s outside the enumerated classes" % (label,))
        return self._index[key]


def equivalence_classes(orb: Orbifold, labels: Sequence[ModuleLabel], policy: EquivalencePolicy) -> List[LabelClass]:
    return Classifier(orb, labels, policy).classes
