"""Multi-indices and the graded lexicographic basis order.

A multi-index is a plain tuple of nonnegative ints, one exponent per
variable.  Every matrix in the package indexes its rows and columns by
multi-indices sorted in graded lexicographic order: lower total degree
first, and within a degree the lexicographically larger exponent vector
first, so for two variables degree 2 reads z1^2, z1 z2, z2^2.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, Tuple

MultiIndex = Tuple[int, ...]


def total_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def grlex_key(alpha: MultiIndex):
    """Sort key realizing the graded lexicographic order (ascending)."""
    return (sum(alpha), tuple(-e for e in alpha))


def monomials_of_degree(n_vars: int, d: int) -> Iterator[MultiIndex]:
    """All exponent tuples of total degree d, in graded-lex order."""
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if n_vars == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, d - e):
            yield (e,) + rest


def monomials_up_to(n_vars: int, d: int) -> List[MultiIndex]:
    """All exponent tuples of total degree <= d, graded-lex order."""
    out: List[MultiIndex] = []
    for deg in range(d + 1):
        out.extend(monomials_of_degree(n_vars, deg))
    return out


def sorted_grlex(indices: Iterable[MultiIndex]) -> List[MultiIndex]:
    return sorted(indices, key=grlex_key)


def add(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(alpha, beta))


def unit(n_vars: int, i: int) -> MultiIndex:
    """The exponent tuple of the single variable with 0-based index i."""
    return tuple(1 if j == i else 0 for j in range(n_vars))


def zero_index(n_vars: int) -> MultiIndex:
    return (0,) * n_vars
