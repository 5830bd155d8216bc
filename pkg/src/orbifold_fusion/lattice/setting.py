import logging
from functools import cached_property
from typing import List, Optional

from sympy import ImmutableMatrix, Matrix

from orbifold_fusion.exceptions import (
    BadParameter,
    NotEven,
    NotInvolution,
    NotIsometry,
    NotPositiveDefinite,
    NotSymmetric,
)
from orbifold_fusion.linalg.normal_forms import (
    MatrixLike,
    as_matrix,
    canonical_basis,
    identity,
    integer_kernel,
    is_integral,
)
from orbifold_fusion.lattice.sublattice import Sublattice, dual_quotient, full_lattice

logger = logging.getLogger(__name__)


def even_core_basis(gram: ImmutableMatrix, sigma: ImmutableMatrix) -> ImmutableMatrix:
    """Basis of the sublattice where ``(a | sigma a)`` is even.

    The map ``a -> (a | sigma a) mod 2`` is additive, so the even core is the kernel of
    a linear functional and has index 1 or 2.
    """
    n = gram.rows
    twisted = gram * sigma
    parity = [int(twisted[i, i]) % 2 for i in range(n)]
    if not any(parity):
        return identity(n)
    j = parity.index(1)
    columns = []
    for i in range(n):
        v = [0] * n
        if i == j:
            v[j] = 2
        else:
            v[i] = 1
            v[j] = parity[i]
        columns.append(v)
    return canonical_basis(ImmutableMatrix(columns).T)


class OrbifoldSetting(object):
    """A validated even lattice with an involutive isometry.

    The derived lattices are computed on first use and cached. After validation every
    construction works on the even core ``Qbar``.
    """

    def __init__(self, gram: ImmutableMatrix, sigma: ImmutableMatrix, name: Optional[str] = None) -> None:
        self.gram = gram
        self.sigma = sigma
        self.name = name or "custom"

    @property
    def dimension(self) -> int:
        return self.gram.rows

    def pair(self, u: ImmutableMatrix, v: ImmutableMatrix):
        return (u.T * self.gram * v)[0, 0]

    def plus_part(self, v: ImmutableMatrix) -> ImmutableMatrix:
        return ImmutableMatrix((v + self.sigma * v) / 2)

    def minus_part(self, v: ImmutableMatrix) -> ImmutableMatrix:
        return ImmutableMatrix((v - self.sigma * v) / 2)

    @cached_property
    def Q(self) -> Sublattice:
        return full_lattice("Q", self.gram)

    @cached_property
    def Qbar(self) -> Sublattice:
        return Sublattice("Qbar", self.gram, even_core_basis(self.gram, self.sigma))

    @property
    def even_core_index(self) -> int:
        return abs(int(self.Qbar.basis.det()))

    @cached_property
    def L_plus(self) -> Sublattice:
        return eigenlattice(self, +1)

    @cached_property
    def L_minus(self) -> Sublattice:
        return eigenlattice(self, -1)

    @cached_property
    def L(self) -> Sublattice:
        return Sublattice("L", self.gram, self.L_plus.basis.row_join(self.L_minus.basis))

    def describe(self) -> List[str]:
        return [
            "name: %s" % self.name,
            "rank: %d" % self.dimension,
            "even core index: %d" % self.even_core_index,
            "rank L+: %d" % self.L_plus.rank,
            "rank L-: %d" % self.L_minus.rank,
        ]

    def __repr__(self) -> str:
        return "OrbifoldSetting(%s, rank=%d)" % (self.name, self.dimension)


def eigenlattice(s: OrbifoldSetting, sign: int) -> Sublattice:
    if sign not in (1, -1):
        raise BadParameter("eigenvalue sign must be +1 or -1, got %r" % sign)
    basis = integer_kernel(s.sigma - sign * identity(s.dimension))
    return Sublattice("L+" if sign > 0 else "L-", s.gram, basis)


def validate_setting(gram: MatrixLike, sigma: MatrixLike, name: Optional[str] = None) -> OrbifoldSetting:
    gram, sigma = as_matrix(gram), as_matrix(sigma)
    n = gram.rows
    if gram.shape != (n, n) or sigma.shape != (n, n) or n == 0:
        raise BadParameter("gram and sigma must be nonempty square matrices of the same size")
    if not (is_integral(gram) and is_integral(sigma)):
        raise BadParameter("gram and sigma must have integer entries")
    if gram != gram.T:
        raise NotSymmetric("gram matrix is not symmetric")
    if any(int(gram[i, i]) % 2 for i in range(n)):
        raise NotEven("gram matrix has an odd diagonal entry")
    if not Matrix(gram).is_positive_definite:
        raise NotPositiveDefinite("gram matrix is not positive definite")
    if sigma.T * gram * sigma != gram:
        raise NotIsometry("sigma does not preserve the gram matrix")
    if sigma * sigma != identity(n):
        raise NotInvolution("sigma is not an involution")

    setting = OrbifoldSetting(gram, sigma, name)
    logger.info(
        "validated %s: even core index %d, rank L+ %d, rank L- %d",
        setting.name, setting.even_core_index, setting.L_plus.rank, setting.L_minus.rank,
    )
    logger.info(
        "discriminants of %s: Q %s, Qbar %s, L+ %s, L- %s",
        setting.name,
        *(dual_quotient(sub).describe() for sub in (setting.Q, setting.Qbar, setting.L_plus, setting.L_minus)),
    )
    return setting
