"""Sublattices of the ambient lattice, their duals and coset arithmetic.

Vectors are sympy column matrices in the coordinates of the ambient lattice ``Q``.
Pairings always use the ambient Gram matrix.
"""
import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

from sympy import ImmutableMatrix, Rational, floor

from orbifold_fusion.exceptions import BadParameter, ModulusMismatch
from orbifold_fusion.linalg.normal_forms import (
    identity,
    is_integral,
    rational_inverse,
    smith_normal_form,
)


def column(values: Iterable) -> ImmutableMatrix:
    values = list(values)
    return ImmutableMatrix(len(values), 1, values)


@dataclass(frozen=True, eq=False)
class CosetVector(object):
    """Canonical representative of ``vector + modulus``.

    ``coords`` are the coordinates of the representative in the modulus basis, all in
    ``[0, 1)``. Two coset vectors are equal when they share modulus and coordinates.
    """

    modulus: str
    coords: Tuple[Rational, ...]
    vector: ImmutableMatrix = field(repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CosetVector):
            return NotImplemented
        return self.modulus == other.modulus and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.modulus, self.coords))

    @property
    def sort_key(self) -> Tuple[Rational, ...]:
        return self.coords

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(%s)" % ", ".join(str(c) for c in self.coords)


class Sublattice(object):
    def __init__(self, name: str, ambient_gram: ImmutableMatrix, basis: ImmutableMatrix) -> None:
        self.name = name
        self.ambient_gram = ImmutableMatrix(ambient_gram)
        self.basis = ImmutableMatrix(basis)
        self.gram = ImmutableMatrix(self.basis.T * self.ambient_gram * self.basis)
        self._gram_inverse = rational_inverse(self.gram)

    @property
    def dimension(self) -> int:
        return self.basis.rows

    @property
    def rank(self) -> int:
        return self.basis.cols

    @property
    def is_integral(self) -> bool:
        return is_integral(self.gram)

    @property
    def determinant(self) -> Rational:
        return self.gram.det() if self.rank else Rational(1)

    @property
    def dual_basis(self) -> ImmutableMatrix:
        return ImmutableMatrix(self.basis * self._gram_inverse)

    def zero(self) -> ImmutableMatrix:
        return ImmutableMatrix.zeros(self.dimension, 1)

    def pair(self, u: ImmutableMatrix, v: ImmutableMatrix) -> Rational:
        return (u.T * self.ambient_gram * v)[0, 0]

    def norm(self, v: ImmutableMatrix) -> Rational:
        return self.pair(v, v)

    def pairings(self, v: ImmutableMatrix) -> ImmutableMatrix:
        """Pairings of ``v`` with the basis vectors."""
        return ImmutableMatrix(self.basis.T * self.ambient_gram * v)

    def coordinates(self, v: ImmutableMatrix) -> ImmutableMatrix:
        """Rational coordinates of the orthogonal projection of ``v`` onto the span."""
        return ImmutableMatrix(self._gram_inverse * self.pairings(v))

    def in_span(self, v: ImmutableMatrix) -> bool:
        return self.basis * self.coordinates(v) == v

    def contains(self, v: ImmutableMatrix) -> bool:
        return self.in_span(v) and is_integral(self.coordinates(v))

    def pairs_integrally(self, v: ImmutableMatrix) -> bool:
        return is_integral(self.pairings(v))

    def reduce(self, v: ImmutableMatrix) -> CosetVector:
        if not self.in_span(v):
            raise ModulusMismatch("vector %s is not in the span of %s" % (list(v), self.name))
        fractional = [x - floor(x) for x in self.coordinates(v)]
        return CosetVector(self.name, tuple(fractional), ImmutableMatrix(self.basis * column(fractional)))

    def _check(self, *cosets: CosetVector) -> None:
        for coset in cosets:
            if coset.modulus != self.name:
                raise ModulusMismatch("coset modulo %s used with %s" % (coset.modulus, self.name))

    def add(self, a: CosetVector, b: CosetVector) -> CosetVector:
        self._check(a, b)
        return self.reduce(a.vector + b.vector)

    def negate(self, a: CosetVector) -> CosetVector:
        self._check(a)
        return self.reduce(-a.vector)

    def subtract(self, a: CosetVector, b: CosetVector) -> CosetVector:
        self._check(a, b)
        return self.reduce(a.vector - b.vector)

    def twice_in(self, a: CosetVector) -> bool:
        self._check(a)
        return self.contains(2 * a.vector)

    def dual_coordinates(self, a: CosetVector) -> Tuple[int, ...]:
        """Integer pairings of a dual coset representative with the basis."""
        self._check(a)
        return tuple(int(x) for x in self.pairings(a.vector))

    def from_dual_coordinates(self, x: Iterable[int]) -> CosetVector:
        x = list(x)
        if len(x) != self.rank:
            raise BadParameter("expected %d dual coordinates for %s, got %d" % (self.rank, self.name, len(x)))
        return self.reduce(ImmutableMatrix(self.dual_basis * column(x)))

    def __repr__(self) -> str:
        return "Sublattice(%s, rank=%d)" % (self.name, self.rank)


@dataclass(frozen=True)
class QuotientGroup(object):
    modulus: Sublattice
    invariant_factors: Tuple[int, ...]
    generators: Tuple[CosetVector, ...]

    @property
    def order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def elements(self) -> List[CosetVector]:
        zero = self.modulus.reduce(self.modulus.zero())
        result = set()
        for multiples in itertools.product(*[range(d) for d in self.invariant_factors]):
            vector = zero.vector
            for m, g in zip(multiples, self.generators):
                vector = vector + m * g.vector
            result.add(self.modulus.reduce(vector))
        return sorted(result or {zero}, key=lambda c: c.sort_key)

    def describe(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " x ".join("Z%d" % d for d in self.invariant_factors)


def dual_quotient(sub: Sublattice) -> QuotientGroup:
    """The discriminant group ``sub* / sub`` with generators of exact orders."""
    if sub.rank == 0:
        return QuotientGroup(sub, (), ())
    if not sub.is_integral:
        raise BadParameter("%s is not integral, its dual quotient is undefined" % sub.name)

    decomposition = smith_normal_form(sub.gram)
    u_inverse = rational_inverse(decomposition.U)
    to_vectors = sub.dual_basis * u_inverse
    factors, generators = [], []
    for i, d in enumerate(decomposition.diagonal):
        if d > 1:
            factors.append(d)
            generators.append(sub.reduce(ImmutableMatrix(to_vectors[:, i])))
    return QuotientGroup(sub, tuple(factors), tuple(generators))


def two_torsion(group: QuotientGroup) -> QuotientGroup:
    """Subgroup of elements killed by 2."""
    factors, generators = [], []
    for d, g in zip(group.invariant_factors, group.generators):
        if d % 2 == 0:
            factors.append(2)
            generators.append(group.modulus.reduce((d // 2) * g.vector))
    return QuotientGroup(group.modulus, tuple(factors), tuple(generators))


def full_lattice(name: str, gram: ImmutableMatrix) -> Sublattice:
    return Sublattice(name, gram, identity(gram.rows))
