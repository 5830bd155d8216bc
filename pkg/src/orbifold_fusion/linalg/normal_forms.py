"""Exact integer and rational matrix normal forms.

Everything here works on :class:`sympy.ImmutableMatrix` with Python integers or sympy
rationals as entries, so no arithmetic ever overflows.
"""
from typing import List, NamedTuple, Sequence, Union

from sympy import ImmutableMatrix, Matrix, ZZ, eye, gcdex, ilcm
from sympy.matrices import MatrixBase
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from orbifold_fusion.exceptions import SingularMatrix, VerificationFailure

MatrixLike = Union[MatrixBase, Sequence[Sequence[int]]]


def as_matrix(a: MatrixLike, rows: int = None, cols: int = None) -> ImmutableMatrix:
    if isinstance(a, MatrixBase):
        return ImmutableMatrix(a)
    a = [list(row) for row in a]
    if not a:
        return ImmutableMatrix.zeros(rows or 0, cols or 0)
    return ImmutableMatrix(a)


def is_integral(a: MatrixBase) -> bool:
    return all(x.is_integer for x in a)


def identity(n: int) -> ImmutableMatrix:
    return ImmutableMatrix(eye(n))


class SmithDecomposition(NamedTuple):
    U: ImmutableMatrix
    S: ImmutableMatrix
    V: ImmutableMatrix

    @property
    def diagonal(self) -> List[int]:
        return [int(self.S[i, i]) for i in range(min(self.S.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap(u: Matrix, v: Matrix, i: int, j: int) -> None:
    u.row_swap(i, j)
    v.col_swap(i, j)


def _gcd_step(u: Matrix, v: Matrix, i: int, x: int, y: int) -> None:
    # diag(x, y) -> diag(gcd, lcm) on positions i, i + 1
    p, q, g = gcdex(x, y)
    left = Matrix([[p, q], [-y // g, x // g]])
    right = Matrix([[1, -q * y // g], [1, p * x // g]])
    u[i:i + 2, :] = left * u[i:i + 2, :]
    v[:, i:i + 2] = v[:, i:i + 2] * right


def _restore_divisibility(a: ImmutableMatrix, u: Matrix, v: Matrix) -> None:
    n = min(a.shape)
    changed = True
    while changed:
        changed = False
        s = u * a * v
        for i in range(n - 1):
            x, y = int(s[i, i]), int(s[i + 1, i + 1])
            if x == 0 and y != 0:
                _swap(u, v, i, i + 1)
            elif x != 0 and y % x != 0:
                _gcd_step(u, v, i, x, y)
            else:
                continue
            changed = True
            break
        s = u * a * v
        for i in range(n):
            if s[i, i] < 0:
                u[i, :] = -u[i, :]


def smith_normal_form(a: MatrixLike) -> SmithDecomposition:
    """Smith normal form with transforms, ``U * A * V == S``.

    The diagonal of ``S`` is nonnegative and every entry divides the next one.

    >>> smith_normal_form([[2, -1], [-1, 2]]).diagonal
    [1, 3]
    """
    a = as_matrix(a)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return SmithDecomposition(identity(rows), ImmutableMatrix.zeros(rows, cols), identity(cols))

    _, u, v = smith_normal_decomp(Matrix(a), domain=ZZ)
    u, v = Matrix(u), Matrix(v)
    _restore_divisibility(a, u, v)

    s = u * a * v
    decomposition = SmithDecomposition(ImmutableMatrix(u), ImmutableMatrix(s), ImmutableMatrix(v))
    _check_smith(a, decomposition)
    return decomposition


def _check_smith(a: ImmutableMatrix, d: SmithDecomposition) -> None:
    if abs(d.U.det()) != 1 or abs(d.V.det()) != 1:
        raise VerificationFailure("Smith transforms are not unimodular")
    s = d.S
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j and s[i, j] != 0:
                raise VerificationFailure("Smith form is not diagonal")
    diagonal = d.diagonal
    for x, y in zip(diagonal, diagonal[1:]):
        if x < 0 or (x == 0 and y != 0) or (x != 0 and y % x != 0):
            raise VerificationFailure("Smith diagonal %s violates the divisibility chain" % diagonal)


def _reverse(b: MatrixBase, rows: bool = True, cols: bool = True) -> ImmutableMatrix:
    row_order = list(reversed(range(b.rows))) if rows else list(range(b.rows))
    col_order = list(reversed(range(b.cols))) if cols else list(range(b.cols))
    return ImmutableMatrix(b.extract(row_order, col_order))


def canonical_basis(b: MatrixBase) -> ImmutableMatrix:
    """Column Hermite form of an integer basis.

    Columns are ordered by the row of their leading entry, and every leading entry is
    positive.
    """
    b = ImmutableMatrix(b)
    if b.cols == 0 or b.rows == 0:
        return b
    flipped = _reverse(b, cols=False)
    h = hermite_normal_form(Matrix(flipped.rows, flipped.cols, [int(x) for x in flipped]))
    return _reverse(h)


def integer_kernel(a: MatrixLike, cols: int = None) -> ImmutableMatrix:
    """Columns form a saturated ℤ-basis of ``{x : A x = 0}``."""
    a = as_matrix(a, cols=cols)
    n = a.cols
    if n == 0:
        return ImmutableMatrix.zeros(0, 0)
    if a.rows == 0:
        return identity(n)
    decomposition = smith_normal_form(a)
    rank = decomposition.rank
    kernel = decomposition.V[:, rank:]
    return canonical_basis(kernel)


def rational_inverse(a: MatrixLike) -> ImmutableMatrix:
    a = as_matrix(a)
    if a.rows != a.cols:
        raise SingularMatrix("matrix of shape %s is not square" % (a.shape,))
    if a.rows == 0:
        return a
    if a.det() == 0:
        raise SingularMatrix("matrix is singular")
    return ImmutableMatrix(a.inv())


def common_denominator(a: MatrixBase) -> int:
    denominator = 1
    for x in a:
        denominator = ilcm(denominator, x.q)
    return int(denominator)


def lattice_basis(generators: MatrixBase) -> ImmutableMatrix:
    """Canonical basis of the lattice spanned by rational generator columns."""
    generators = ImmutableMatrix(generators)
    if generators.cols == 0 or all(x == 0 for x in generators):
        return ImmutableMatrix.zeros(generators.rows, 0)
    denominator = common_denominator(generators)
    scaled = generators * denominator
    return canonical_basis(scaled) / denominator
