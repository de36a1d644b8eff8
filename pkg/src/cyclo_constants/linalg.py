"""Exact linear algebra.

Two routes are provided.  Small matrices over Q or Q(zeta_n) go through plain
Gauss-Jordan elimination on exact field elements.  Large integer matrices go
through elimination mod a 31-bit prime, rational reconstruction of the reduced
basis, and an exact integer check of every recovered kernel vector.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from . import _kernels
from ._kernels import PRIME


def _is_zero(x) -> bool:
    return not x


def _lift(rows) -> list[list]:
    return [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]


def rank_exact(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of Fractions, ints or CycloElems."""
    A = _lift(rows)
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if not _is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = 1 / A[rank][c]
        for i in range(rank + 1, len(A)):
            f = A[i][c]
            if not _is_zero(f):
                f = f * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == len(A):
            break
    return rank


def nullspace_exact(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : A x = 0} over the coefficient field, one vector per free column."""
    A = _lift(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if not _is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        lead = A[r][c]
        A[r] = [a / lead for a in A[r]]
        for i in range(len(A)):
            if i != r and not _is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row, pc in enumerate(pivots):
            vec[pc] = -A[row][free]
        basis.append(vec)
    return basis


def rational_reconstruct(a: int, p: int = PRIME) -> Fraction | None:
    """Fraction x/y with |x|, y <= sqrt(p/2) and x = a*y mod p, if one exists."""
    a %= p
    bound = isqrt(p // 2)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _primitive(vec: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _int_matvec_is_zero(A: np.ndarray, v: Sequence[int]) -> bool:
    nz = [(j, x) for j, x in enumerate(v) if x]
    if not nz:
        return True
    cols = np.array([j for j, _ in nz])
    sub = A[:, cols]
    if max(abs(x) for _, x in nz) < (1 << 20) and np.abs(sub).max(initial=0) < (1 << 20) and len(nz) < (1 << 20):
        return not np.any(sub @ np.array([x for _, x in nz], dtype=np.int64))
    obj = sub.astype(object)
    return not any(obj @ np.array([x for _, x in nz], dtype=object))


def nullity_modp(A: np.ndarray) -> int:
    A = np.asarray(A, dtype=np.int64)
    return A.shape[1] - _kernels.rank_modp(A)


def integer_nullspace(A: np.ndarray) -> list[list[int]]:
    """Primitive integer basis of the rational kernel of an integer matrix.

    The basis is the reduced one (identity on the free columns, scaled).
    """
    A = np.asarray(A, dtype=np.int64)
    rows, ncols = A.shape
    if rows == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    R, piv = _kernels.rref_modp(A)
    piv = [int(c) for c in piv]
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    ok = True
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in enumerate(piv):
            x = rational_reconstruct(-int(R[row, f]))
            if x is None:
                ok = False
                break
            vec[pc] = x
        if not ok:
            break
        ints = _primitive(vec)
        if not _int_matvec_is_zero(A, ints):
            ok = False
            break
        basis.append(ints)
    if ok:
        return basis
    # unlucky prime or large entries: fall back to exact elimination
    return [_primitive([Fraction(x) for x in v]) for v in nullspace_exact(A.tolist(), ncols)]
