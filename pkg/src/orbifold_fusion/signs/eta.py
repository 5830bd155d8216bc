import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sympy import ImmutableMatrix

from orbifold_fusion.exceptions import Inconsistent
from orbifold_fusion.lattice.setting import OrbifoldSetting
from orbifold_fusion.linalg import gf2
from orbifold_fusion.linalg.normal_forms import rational_inverse
from orbifold_fusion.signs.cocycle import Cocycle, parity_vector, sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EtaForm(object):
    """Quadratic refinement ``q`` of the defect ``f(a, b) = eps(a, b) eps(sigma a, sigma b)``.

    ``eta(a) = (-1) ** q(a)`` with ``q(a) = h . a + sum_{i<j} F_ij a_i a_j`` in the
    coordinates of the even core.
    """

    cocycle: Cocycle
    defect: np.ndarray
    linear: Tuple[int, ...]

    def exponent(self, v: ImmutableMatrix) -> int:
        a = self.cocycle.lattice_parity(v)
        quadratic = int(a @ np.triu(self.defect, 1) @ a)
        return (int(np.dot(self.linear, a)) + quadratic) % 2 if len(a) else 0

    def __call__(self, v: ImmutableMatrix) -> int:
        return sign(self.exponent(v))

    def defect_sign(self, u: ImmutableMatrix, v: ImmutableMatrix) -> int:
        a, b = self.cocycle.lattice_parity(u), self.cocycle.lattice_parity(v)
        return sign(int(a @ self.defect @ b))


def sigma_in_basis(s: OrbifoldSetting) -> np.ndarray:
    basis = s.Qbar.basis
    relative = rational_inverse(basis) * s.sigma * basis
    return np.array([[int(x) for x in row] for row in relative.tolist()], dtype=np.int64)


def build_eta(s: OrbifoldSetting, cocycle: Cocycle) -> EtaForm:
    bits = cocycle.bits
    sigma = sigma_in_basis(s)
    defect = (bits + sigma.T @ bits @ sigma) % 2
    if np.any(defect != defect.T) or np.any(np.diag(defect)):
        raise Inconsistent("the sigma defect of the cocycle is not an alternating form")

    upper = np.triu(defect, 1)
    rows, rhs = [], []
    for i in range(s.L_plus.rank):
        c = parity_vector(s.Qbar.coordinates(ImmutableMatrix(s.L_plus.basis[:, i])))
        rows.append(list(c))
        rhs.append(int(c @ upper @ c) % 2)

    n = s.Qbar.rank
    linear = gf2.solve_least(rows, rhs, n)
    if linear is None:
        raise Inconsistent("eta cannot be normalized to 1 on L+")
    logger.debug("eta linear part for %s: %s", s.name, linear)
    return EtaForm(cocycle, defect, tuple(linear))
