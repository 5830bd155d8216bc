"""The bimultiplicative 2-cocycle and the auxiliary sign pi.

For an ordered basis with Gram matrix ``g`` the cocycle is
``eps(a, b) = (-1) ** (a^T B b)`` in basis coordinates. ``B`` holds the strictly lower
triangle of ``g`` mod 2, and ``g_ii / 2`` mod 2 on the diagonal.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np
from sympy import ImmutableMatrix

from orbifold_fusion.exceptions import ModulusMismatch, NonIntegralExponent, OddNorm
from orbifold_fusion.lattice.sublattice import CosetVector, Sublattice


def parity_vector(coords) -> np.ndarray:
    return np.array([int(x) % 2 for x in coords], dtype=np.int64)


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True, eq=False)
class Cocycle(object):
    lattice: Sublattice
    bits: np.ndarray

    def lattice_parity(self, v: ImmutableMatrix) -> np.ndarray:
        coords = self.lattice.coordinates(v)
        if not self.lattice.in_span(v) or not all(x.is_integer for x in coords):
            raise ModulusMismatch("vector %s is not in %s" % (list(v), self.lattice.name))
        return parity_vector(coords)

    def bilinear_exponent(self, a: np.ndarray, b: np.ndarray) -> int:
        return int(a @ self.bits @ b) % 2

    def exponent(self, u: ImmutableMatrix, v: ImmutableMatrix) -> int:
        return self.bilinear_exponent(self.lattice_parity(u), self.lattice_parity(v))

    def __call__(self, u: ImmutableMatrix, v: ImmutableMatrix) -> int:
        return sign(self.exponent(u, v))


def build_cocycle(lattice: Sublattice) -> Cocycle:
    gram = np.array([[int(x) for x in row] for row in lattice.gram.tolist()], dtype=np.int64).reshape(
        lattice.rank, lattice.rank
    )
    diagonal = np.diag(gram)
    if np.any(diagonal % 2):
        raise OddNorm("basis of %s has a vector of odd norm" % lattice.name)
    bits = np.tril(gram % 2, -1) + np.diag((diagonal // 2) % 2)
    return Cocycle(lattice, bits)


def _vector(x: Union[CosetVector, ImmutableMatrix]) -> ImmutableMatrix:
    return x.vector if isinstance(x, CosetVector) else x


def pi_sign(lattice: Sublattice, lam, mu) -> int:
    """``(-1) ** (|lam|^2 |mu|^2)``."""
    exponent = lattice.norm(_vector(lam)) * lattice.norm(_vector(mu))
    if not exponent.is_integer:
        raise NonIntegralExponent("|lam|^2 |mu|^2 = %s is not an integer" % exponent)
    return sign(int(exponent))
