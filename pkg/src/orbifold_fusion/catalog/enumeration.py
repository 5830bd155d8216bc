import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from orbifold_fusion.catalog.labels import ModuleLabel, TwistedLabel, Type1Label, Type2Label, fold
from orbifold_fusion.lattice.sublattice import CosetVector
from orbifold_fusion.orbifold import Orbifold

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PaperInventory(object):
    """Labels in the published parametrization.

    ``twisted`` lists one label per pair (lambda class, chi) with the sign folded to
    ``+``. ``signed_twisted`` holds both signs.
    """

    type1: Tuple[Type1Label, ...]
    type2: Tuple[Type2Label, ...]
    twisted: Tuple[TwistedLabel, ...]

    @property
    def signed_twisted(self) -> Tuple[TwistedLabel, ...]:
        return tuple(
            sorted(
                [TwistedLabel(t.lam_index, t.character, sign) for t in self.twisted for sign in (1, -1)],
                key=lambda x: x.sort_key,
            )
        )

    @property
    def labels(self) -> List[ModuleLabel]:
        """Every signed label, in classify order."""
        return list(self.type1) + list(self.type2) + list(self.signed_twisted)

    @property
    def counts(self) -> Dict[str, int]:
        return {
            "type1": len(self.type1),
            "type2": len(self.type2),
            "twisted": len(self.twisted),
            "twisted_signed": 2 * len(self.twisted),
            "total_signed": len(self.type1) + len(self.type2) + 2 * len(self.twisted),
        }


def untwisted_pairs(orb: Orbifold) -> List[Tuple[CosetVector, CosetVector]]:
    """All ``(lambda, mu)`` in ``L+*/L+ x L-*/L-`` with ``lambda + mu`` in ``Qbar*``."""
    s = orb.setting
    pairs = []
    for mu in orb.minus_cosets:
        base = orb.partner(mu)
        for shift in orb.plus_in_core:
            pairs.append((s.L_plus.add(base, shift), mu))
    return sorted(set(pairs), key=lambda p: (p[0].sort_key, p[1].sort_key))


def enumerate_paper_labels(orb: Orbifold) -> PaperInventory:
    s = orb.setting
    type1, type2 = [], []
    for lam, mu in untwisted_pairs(orb):
        if s.L_minus.twice_in(mu):
            type2.extend(Type2Label(lam, mu, sign) for sign in (1, -1))
        elif fold(orb, mu) == mu:
            type1.append(Type1Label(lam, mu))

    twisted = [
        TwistedLabel(index, chi, 1)
        for index in range(len(orb.lambda_classes))
        for chi in orb.characters
    ]
    inventory = PaperInventory(
        tuple(sorted(type1, key=lambda x: x.sort_key)),
        tuple(sorted(type2, key=lambda x: x.sort_key)),
        tuple(sorted(twisted, key=lambda x: x.sort_key)),
    )
    logger.info("paper inventory for %s: %s", orb.name, inventory.counts)
    return inventory
