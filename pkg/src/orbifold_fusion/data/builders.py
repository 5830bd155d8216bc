"""Named example settings.

* ``a2-double``: ``A2 + A2`` with the swap of the two copies.
* ``perm-double:<gram>``: ``K + K`` with the swap, for a JSON Gram matrix of ``K``.
* ``rank1-double:<k>``: the permutation double of ``Z gamma`` with ``|gamma|^2 = 2k``.
* ``an-dynkin:<n>``: the ``A_n`` root lattice with ``alpha_i <-> alpha_{n-i+1}``.
* ``neg-identity:<gram>``: any even lattice with ``sigma = -1``.
"""
import json
from typing import Callable, Dict, List

from orbifold_fusion.data.documents import InputDocument
from orbifold_fusion.exceptions import BadParameter, UnknownBuilder

A2 = [[2, -1], [-1, 2]]

Matrix = List[List[int]]


def _parse_gram(text: str) -> Matrix:
    try:
        gram = json.loads(text)
    except ValueError:
        raise BadParameter("cannot read Gram matrix %r" % text)
    if (
        not isinstance(gram, list)
        or not gram
        or not all(isinstance(row, list) and len(row) == len(gram) for row in gram)
        or not all(isinstance(x, int) and not isinstance(x, bool) for row in gram for x in row)
    ):
        raise BadParameter("Gram matrix must be a non-empty square array of integers, got %r" % text)
    return gram


def _parse_positive(text: str, name: str, minimum: int = 1) -> int:
    try:
        value = int(text)
    except ValueError:
        raise BadParameter("%s must be an integer, got %r" % (name, text))
    if value < minimum:
        raise BadParameter("%s must be at least %d, got %d" % (name, minimum, value))
    return value


def permutation_double(gram: Matrix, name: str) -> InputDocument:
    d = len(gram)
    doubled = [[0] * (2 * d) for _ in range(2 * d)]
    swap = [[0] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            doubled[i][j] = doubled[d + i][d + j] = gram[i][j]
        swap[i][d + i] = swap[d + i][i] = 1
    return InputDocument(doubled, swap, name)


def a_n_dynkin(n: int) -> InputDocument:
    gram = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    sigma = [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]
    return InputDocument(gram, sigma, "A%d-dynkin" % n)


def negative_identity(gram: Matrix, name: str) -> InputDocument:
    d = len(gram)
    return InputDocument(gram, [[-1 if i == j else 0 for j in range(d)] for i in range(d)], name)


def _a2_double(argument: str) -> InputDocument:
    if argument:
        raise BadParameter("a2-double takes no parameter")
    return permutation_double(A2, "A2+A2")


def _perm_double(argument: str) -> InputDocument:
    return permutation_double(_parse_gram(argument), "perm-double")


def _rank1_double(argument: str) -> InputDocument:
    k = _parse_positive(argument, "k")
    return permutation_double([[2 * k]], "rank1-double-%d" % k)


def _an_dynkin(argument: str) -> InputDocument:
    return a_n_dynkin(_parse_positive(argument, "n", minimum=2))


def _neg_identity(argument: str) -> InputDocument:
    return negative_identity(_parse_gram(argument), "neg-identity")


BUILDERS: Dict[str, Callable[[str], InputDocument]] = {
    "a2-double": _a2_double,
    "perm-double": _perm_double,
    "rank1-double": _rank1_double,
    "an-dynkin": _an_dynkin,
    "neg-identity": _neg_identity,
}


def build_example(builder: str) -> InputDocument:
    """Input document for a builder string ``name[:parameter]``.

    >>> build_example("rank1-double:2").gram
    [[4, 0], [0, 4]]
    """
    name, _, argument = builder.strip().partition(":")
    if name not in BUILDERS:
        raise UnknownBuilder("unknown builder %r, expected one of %s" % (name, sorted(BUILDERS)))
    return BUILDERS[name](argument)
