"""Linear algebra over the field with two elements."""
from typing import List, Optional, Sequence

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

F2 = GF(2)

BitRows = Sequence[Sequence[int]]


def _to_domain(rows: BitRows, cols: int) -> DomainMatrix:
    return DomainMatrix([[F2(int(x) % 2) for x in row] for row in rows], (len(rows), cols), F2)


def _bits(dm: DomainMatrix) -> List[List[int]]:
    return [[int(x) % 2 for x in row] for row in dm.to_Matrix().tolist()]


def rank(rows: BitRows, cols: int) -> int:
    if not rows or cols == 0:
        return 0
    _, pivots = _to_domain(rows, cols).rref()
    return len(pivots)


def is_consistent(rows: BitRows, rhs: Sequence[int], cols: int) -> bool:
    if not rows:
        return True
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    _, pivots = _to_domain(augmented, cols + 1).rref()
    return cols not in pivots


def solve_least(rows: BitRows, rhs: Sequence[int], cols: int) -> Optional[List[int]]:
    """Lexicographically least solution of ``rows * x = rhs``, or None.

    Unknowns are fixed one at a time, trying 0 before 1.

    >>> solve_least([[1, 1]], [1], 2)
    [0, 1]
    """
    rows = [list(row) for row in rows]
    rhs = list(rhs)
    if not is_consistent(rows, rhs, cols):
        return None
    solution = []
    for i in range(cols):
        unit = [1 if j == i else 0 for j in range(cols)]
        if is_consistent(rows + [unit], rhs + [0], cols):
            value = 0
        else:
            value = 1
        rows.append(unit)
        rhs.append(value)
        solution.append(value)
    return solution


def nullspace(rows: BitRows, cols: int) -> List[List[int]]:
    """Reduced-echelon basis of the right kernel, one bit vector per basis element."""
    if cols == 0:
        return []
    if not rows:
        return [[1 if j == i else 0 for j in range(cols)] for i in range(cols)]
    kernel = _to_domain(rows, cols).nullspace()
    basis = [row for row in _bits(kernel) if any(row)]
    if not basis:
        return []
    echelon, pivots = _to_domain(basis, cols).rref()
    return _bits(echelon)[:len(pivots)]
