"""Exact linear algebra over Q on top of sympy's DomainMatrix."""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import Matrix
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import InputError

logger = logging.getLogger(__name__)

Rows = List[List[Fraction]]


def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = []
    for row in rows:
        if len(row) != ncols:
            raise InputError(f"row of length {len(row)} in a matrix with {ncols} columns")
        data.append([QQ(int(v.numerator), int(v.denominator)) for v in map(Fraction, row)])
    return DomainMatrix(data, (len(data), ncols), QQ)


def _from_matrix(matrix: Matrix) -> Rows:
    return [
        [Fraction(int(entry.p), int(entry.q)) for entry in matrix.row(i)]
        for i in range(matrix.rows)
    ]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Rows, Tuple[int, ...]]:
    """Reduced row echelon form, zero rows dropped, and the pivot columns."""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _to_domain(rows, ncols).rref()
    dense = _from_matrix(reduced.to_Matrix())
    return dense[: len(pivots)], tuple(pivots)


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Rows:
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    logger.debug("nullspace of a %d x %d system", len(rows), ncols)
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis: Rows = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    return basis


def canonical_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> Rows:
    """Reduced echelon form of a spanning set: a basis independent of the input order."""
    reduced, _ = rref(vectors, ncols)
    return reduced


def inverse(rows: Sequence[Sequence[Fraction]]) -> Rows:
    """Exact inverse of a square matrix."""
    n = len(rows)
    if n == 0:
        return []
    inv = _to_domain(rows, n).inv()
    return _from_matrix(inv.to_Matrix())
