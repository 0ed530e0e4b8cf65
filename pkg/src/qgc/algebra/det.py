"""Fraction-free (Bareiss) determinants over an integral domain.

The element type only needs ``+ - *``, a zero test through ``bool`` and an
exact ``//``; both :class:`IntPoly` and :class:`MultiPoly` qualify, as do ints.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def _size(x) -> tuple:
    # rough cost of using x as a pivot: number of terms, then magnitude
    if isinstance(x, int):
        return (1, abs(x))
    n = len(x)
    if hasattr(x, "terms"):
        top = max(sum(e) for e in x.terms)
        big = max(abs(a) for a in x.terms.values())
    else:
        top = x.degree
        big = max(abs(a) for a in x.coeffs)
    return (n + top, big)


def bareiss_det(matrix: Sequence[Sequence[T]], one: T, pivot_cost: Callable = _size) -> T:
    """Determinant by Bareiss elimination with full pivoting.

    At each step the cheapest nonzero entry of the remaining block is moved to
    the pivot position; row and column swaps are tracked in the sign.  Every
    division is exact in the underlying ring.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("determinant of a 0x0 matrix")
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    a = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            row = a[i]
            for j in range(k, n):
                x = row[j]
                if x:
                    cost = pivot_cost(x)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
        if best is None:
            return one - one
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        piv = a[k][k]
        rowk = a[k]
        unit_prev = prev == one
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                akj = rowk[j]
                x = rowi[j]
                if aik and akj:
                    num = piv * x - aik * akj if x else -(aik * akj)
                elif x:
                    num = piv * x
                else:
                    continue
                rowi[j] = num if unit_prev else num // prev
            rowi[k] = one - one
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def multi_det(matrix):
    from .multipoly import MultiPoly

    return bareiss_det(matrix, MultiPoly.const(1))


def intpoly_det(matrix):
    from .intpoly import IntPoly

    return bareiss_det(matrix, IntPoly.const(1))
