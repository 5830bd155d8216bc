"""Coset structures derived from an orbifold setting.

* the transversal of ``Qbar / L`` with ``L = L+ (+) L-``,
* ``M / L-``, the 2-torsion of the discriminant group of ``L-``,
* the projected lattice ``pi+ Qbar`` and the classes of ``(pi+ Qbar)*`` that label the
  twisted modules,
* the partner map ``mu -> lambda0(mu)`` with ``lambda0(mu) + mu`` in ``Qbar*``.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Tuple

from sympy import ImmutableMatrix

from orbifold_fusion.exceptions import BadLabel, VerificationFailure
from orbifold_fusion.lattice.setting import OrbifoldSetting
from orbifold_fusion.lattice.sublattice import (
    CosetVector,
    QuotientGroup,
    Sublattice,
    column,
    dual_quotient,
    two_torsion,
)
from orbifold_fusion.linalg.normal_forms import lattice_basis, rational_inverse, smith_normal_form

logger = logging.getLogger(__name__)


def transversal(s: OrbifoldSetting) -> List[CosetVector]:
    """Representatives of ``Qbar / L``, reduced modulo ``L``, zero first."""
    qbar, lattice = s.Qbar, s.L
    relative = rational_inverse(qbar.basis) * lattice.basis
    decomposition = smith_normal_form(relative)
    u_inverse = rational_inverse(decomposition.U)
    representatives = set()
    for y in itertools.product(*[range(d) for d in decomposition.diagonal]):
        x = u_inverse * column(y)
        representatives.add(lattice.reduce(ImmutableMatrix(qbar.basis * x)))
    logger.debug("transversal of Qbar/L for %s has %d elements", s.name, len(representatives))
    return sorted(representatives, key=lambda c: c.sort_key)


def compute_M(s: OrbifoldSetting) -> QuotientGroup:
    return two_torsion(dual_quotient(s.L_minus))


def projected_lattice(s: OrbifoldSetting) -> Sublattice:
    generators = (s.Qbar.basis + s.sigma * s.Qbar.basis) / 2
    return Sublattice("pi+Qbar", s.gram, lattice_basis(generators))


@dataclass(frozen=True)
class LambdaClasses(object):
    """Classes of ``(pi+ Qbar)*`` modulo its intersection with ``pi+ Qbar``.

    Representatives are stored reduced modulo ``L+``. Index 0 is the zero class.
    """

    projected: Sublattice
    representatives: Tuple[CosetVector, ...]

    def __len__(self) -> int:
        return len(self.representatives)

    def index_of(self, lam: CosetVector) -> int:
        for i, representative in enumerate(self.representatives):
            if self.projected.contains(lam.vector - representative.vector):
                return i
        raise BadLabel("%s does not lie in the dual of the projected lattice" % lam)


def lambda_classes(s: OrbifoldSetting) -> LambdaClasses:
    projected = projected_lattice(s)
    representatives = []
    for lam in plus_dual_in_core(s):
        if not any(projected.contains(lam.vector - r.vector) for r in representatives):
            representatives.append(lam)
    return LambdaClasses(projected, tuple(representatives))


def plus_dual_in_core(s: OrbifoldSetting) -> List[CosetVector]:
    """Elements of ``L+* / L+`` pairing integrally with ``Qbar``."""
    return [lam for lam in dual_quotient(s.L_plus).elements() if s.Qbar.pairs_integrally(lam.vector)]


def partner(s: OrbifoldSetting, shifts: List[CosetVector], mu: CosetVector) -> CosetVector:
    """A canonical ``lambda`` in ``L+*`` with ``lambda + mu`` in ``Qbar*``.

    The plus parts of the transversal are tried first, so ``partner(0) == 0``.
    """
    for gamma in shifts:
        lam = s.L_plus.reduce(s.plus_part(gamma.vector))
        if s.Qbar.pairs_integrally(lam.vector + mu.vector):
            return lam
    for lam in dual_quotient(s.L_plus).elements():
        if s.Qbar.pairs_integrally(lam.vector + mu.vector):
            return lam
    raise VerificationFailure("no partner for %s in the dual of L+" % mu)
