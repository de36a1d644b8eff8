"""Vanishing sums of n-th roots of unity.

An exponent vector alpha = (alpha_0, ..., alpha_{n-1}) encodes the sum
sum_j alpha_j * eps^j.  G_n is the group of integer vectors for which this
sum vanishes and M_n = G_n intersected with N^n.  A vector is tested for
membership by reducing H_alpha(t) = sum alpha_j t^j modulo Phi_n, which is a
single integer matrix product against the table of residues of t^j.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .cyclotomic_arith import (
    NTheoryContext,
    _context,
    _cyclotomic_coeffs,
    _int_poly_divmod_monic,
    cyclo_field,
)

ExpVec = tuple  # tuple[int, ...] of length n

# Refuse meet-in-the-middle enumerations whose half-boxes exceed this many points.
MAX_HALF_BOX = 1 << 20


def weight(alpha: Sequence[int]) -> int:
    """|alpha|, the entry sum."""
    return int(sum(alpha))


def sigma(alpha: Sequence[int]) -> int:
    """sum j*alpha_j reduced into {0, ..., n-1}."""
    n = len(alpha)
    return sum(j * a for j, a in enumerate(alpha)) % n


def unit_vector(n: int, j: int) -> ExpVec:
    v = [0] * n
    v[j % n] = 1
    return tuple(v)


@lru_cache(maxsize=None)
def residue_matrix(n: int) -> np.ndarray:
    """Row j holds the power-basis coordinates of t^j mod Phi_n."""
    fld = cyclo_field(n)
    R = np.array([fld._red_power(j) for j in range(n)], dtype=np.int64)
    R.setflags(write=False)
    return R


def _ctx_n(ctx) -> int:
    return ctx.n if isinstance(ctx, NTheoryContext) else int(ctx)


def _check_len(alpha: Sequence[int], n: int) -> None:
    if len(alpha) != n:
        raise ValueError(f"expected a vector of length {n}, got length {len(alpha)}")


def residue(alpha: Sequence[int], n: int) -> np.ndarray:
    """Coordinates of H_alpha(t) mod Phi_n(t)."""
    return np.asarray(alpha, dtype=object) @ residue_matrix(n).astype(object)


def in_G(alpha: Sequence[int], ctx) -> bool:
    n = _ctx_n(ctx)
    _check_len(alpha, n)
    if max((abs(int(a)) for a in alpha), default=0) < (1 << 40):
        return not np.any(np.asarray(alpha, dtype=np.int64) @ residue_matrix(n))
    return not any(residue(alpha, n))


def in_G_by_division(alpha: Sequence[int], ctx) -> bool:
    """Independent decision procedure: divide H_alpha by Phi_n and inspect the remainder."""
    n = _ctx_n(ctx)
    _check_len(alpha, n)
    _, rem = _int_poly_divmod_monic([int(a) for a in alpha], _cyclotomic_coeffs(n))
    return not any(rem)


def in_G_by_evaluation(alpha: Sequence[int], ctx) -> bool:
    """Third procedure: evaluate H_alpha at zeta in Q(zeta_n) arithmetic."""
    n = _ctx_n(ctx)
    _check_len(alpha, n)
    fld = cyclo_field(n)
    z = fld.zero
    for j, a in enumerate(alpha):
        if a:
            z = z + fld.zeta(j) * int(a)
    return z.is_zero()


def in_M(alpha: Sequence[int], ctx) -> bool:
    n = _ctx_n(ctx)
    _check_len(alpha, n)
    return all(a >= 0 for a in alpha) and in_G(alpha, n)


def rotate(alpha: Sequence[int], k: int = 1) -> ExpVec:
    """zeta^k(alpha); zeta shifts every entry one place to the right, cyclically."""
    n = len(alpha)
    if n == 0:
        return ()
    k %= n
    return tuple(alpha[-k:]) + tuple(alpha[:-k]) if k else tuple(alpha)


def lift(gamma: Sequence[int], c: int) -> ExpVec:
    """Spread gamma out by inserting c-1 zeros after every entry."""
    if c < 1:
        raise ValueError(f"lift factor must be positive, got {c}")
    out = [0] * (len(gamma) * c)
    for i, g in enumerate(gamma):
        out[i * c] = g
    return tuple(out)


def standard_element(n: int, p: int, i: int) -> ExpVec:
    """E^(p)_i = sum_{j<p} e_{i + j n/p}."""
    np_ = n // p
    v = [0] * n
    for j in range(p):
        v[(i + j * np_) % n] = 1
    return tuple(v)


def standard_minimal_elements(ctx) -> list[ExpVec]:
    ctx = ctx if isinstance(ctx, NTheoryContext) else _context(int(ctx))
    out = []
    for p in ctx.primes:
        for i in range(ctx.n // p):
            out.append(standard_element(ctx.n, p, i))
    return out


def is_standard(alpha: Sequence[int], ctx) -> bool:
    n = _ctx_n(ctx)
    return tuple(alpha) in set(standard_minimal_elements(n))


def _support_nullity_is_one(alpha: Sequence[int], n: int) -> bool:
    idx = [j for j, a in enumerate(alpha) if a]
    sub = residue_matrix(n)[idx]
    # rank mod p never exceeds the rank over Q, so nullity 1 mod p is conclusive
    rank = _kernels.rank_modp(sub.T)
    return len(idx) - rank == 1


def is_minimal(alpha: Sequence[int], ctx) -> bool:
    """alpha is a nonzero element of M_n that is not a sum of two nonzero elements."""
    n = _ctx_n(ctx)
    _check_len(alpha, n)
    if not any(alpha):
        raise ValueError("the zero vector is not a candidate minimal element")
    if not in_M(alpha, n):
        raise ValueError(f"{tuple(alpha)} is not in M_{n}")
    if _support_nullity_is_one(alpha, n):
        # every smaller member is a rational multiple of alpha
        g = 0
        for a in alpha:
            g = gcd(g, int(a))
        return g == 1
    return not _kernels.box_has_proper_member(alpha, residue_matrix(n))


def enumerate_bounded(n: int, bound: int) -> np.ndarray:
    """All nonzero members of M_n with entries <= bound, by meet in the middle.

    The coordinates are split into two halves; a vector vanishes exactly when
    the residues of its halves are negatives of each other.
    """
    if bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    h1 = n // 2
    h2 = n - h1
    if (bound + 1) ** h2 > MAX_HALF_BOX:
        raise ValueError(
            f"bounded enumeration for n={n} with bound {bound} needs {(bound + 1) ** h2} points per half; "
            f"limit is {MAX_HALF_BOX}"
        )
    R = residue_matrix(n)
    left = _kernels.box_points(h1, bound)
    right = _kernels.box_points(h2, bound)
    sl = left @ R[:h1]
    sr = -(right @ R[h1:])
    keys = np.concatenate([sl, sr])
    _, inv = np.unique(keys, axis=0, return_inverse=True)
    inv = inv.ravel()
    gl, gr = inv[: len(sl)], inv[len(sl):]
    order = np.argsort(gr, kind="stable")
    gr_sorted = gr[order]
    lo = np.searchsorted(gr_sorted, gl, side="left")
    hi = np.searchsorted(gr_sorted, gl, side="right")
    counts = hi - lo
    li = np.repeat(np.arange(len(sl)), counts)
    starts = np.repeat(lo, counts)
    offs = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
    ri = order[starts + offs]
    vecs = np.concatenate([left[li], right[ri]], axis=1)
    vecs = vecs[vecs.any(axis=1)]
    return vecs


def minimal_from_members(vecs: np.ndarray) -> list[ExpVec]:
    """Minimal elements among a downward-closed finite set of nonzero members."""
    if len(vecs) == 0:
        return []
    w = vecs.sum(axis=1)
    order = np.lexsort(vecs.T[::-1].tolist() + [w]) if vecs.shape[1] else np.argsort(w)
    cands = vecs[order]
    keep = _kernels.filter_minimal(cands)
    return sorted(tuple(int(x) for x in row) for row in cands[keep])


@dataclass
class MinimalElementReport:
    n: int
    minimal_elements: list
    nu: int
    xi: int
    all_standard: bool
    enumeration_complete: bool
    coefficient_bound_used: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "xi": self.xi,
            "complete": self.enumeration_complete,
            "all_standard": self.all_standard,
            "bound": self.coefficient_bound_used,
            "elements": [list(e) for e in self.minimal_elements],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _lift_rotations(elements: Iterable[Sequence[int]], c: int) -> list[ExpVec]:
    out = []
    for beta in elements:
        base = lift(beta, c)
        for j in range(c):
            out.append(rotate(base, j))
    return out


def enumerate_minimal(ctx, coefficient_bound: int = 3) -> MinimalElementReport:
    ctx = ctx if isinstance(ctx, NTheoryContext) else _context(int(ctx))
    if coefficient_bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    n, n0, c = ctx.n, ctx.n0, ctx.n_prime
    standard = set(standard_minimal_elements(ctx))
    if len(ctx.primes) <= 2:
        # every minimal element of M_{n0} is standard; lift and rotate
        base = standard_minimal_elements(_context(n0)) if n0 > 1 else []
        elems = sorted(set(_lift_rotations(base, c)))
        if set(elems) != standard:
            raise AssertionError(f"lifted minimal elements of M_{n0} do not match the standard set of M_{n}")
        complete = True
    else:
        base = minimal_from_members(enumerate_bounded(n0, coefficient_bound))
        elems = sorted(set(_lift_rotations(base, c)))
        complete = False
    return MinimalElementReport(
        n=n,
        minimal_elements=elems,
        nu=len(elems),
        xi=ctx.xi_n,
        all_standard=all(e in standard for e in elems),
        enumeration_complete=complete,
        coefficient_bound_used=coefficient_bound,
    )


def nu(ctx, coefficient_bound: int = 3) -> int:
    return enumerate_minimal(ctx, coefficient_bound).nu


def project_minimal(alpha: Sequence[int], ctx) -> tuple[int, ExpVec]:
    """The unique (j, beta) with alpha = zeta^j(lift(beta, n')) and beta minimal in M_{n0}."""
    ctx = ctx if isinstance(ctx, NTheoryContext) else _context(int(ctx))
    n, n0, c = ctx.n, ctx.n0, ctx.n_prime
    _check_len(alpha, n)
    if c == 1:
        raise ValueError(f"n={n} is square-free")
    if not is_minimal(alpha, ctx):
        raise ValueError(f"{tuple(alpha)} is not a minimal element of M_{n}")
    for j in range(c):
        back = rotate(alpha, -j)
        if all(back[i] == 0 for i in range(n) if i % c):
            beta = tuple(back[::c])
            if not is_minimal(beta, n0):
                break
            return j, beta
    raise AssertionError(f"no lift decomposition found for {tuple(alpha)}")


def _crt(i: int, p: int, j: int, q: int) -> int:
    """k in [0, pq) with k = i mod p and k = j mod q."""
    return (i * q * pow(q, -1, p) + j * p * pow(p, -1, q)) % (p * q)


def pq_decompose(beta: Sequence[int], p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Nonnegative (a, b) with beta = sum a_i P_i + sum b_j Q_j, P_i = E^(q)_i, Q_j = E^(p)_j."""
    n = p * q
    _check_len(beta, n)
    if p == q:
        raise ValueError("p and q must be distinct primes")
    if not in_M(beta, n):
        raise ValueError(f"{tuple(beta)} is not in M_{n}")
    # beta_k = a_{k mod p} + b_{k mod q}; pin b_{q-1} = 0
    a = [int(beta[_crt(i, p, q - 1, q)]) for i in range(p)]
    b = [int(beta[_crt(0, p, j, q)]) - a[0] for j in range(q)]
    for k in range(n):
        if a[k % p] + b[k % q] != beta[k]:
            raise AssertionError("integer combination of standard elements failed")
    s = min(range(q), key=lambda j: (b[j], j))
    if b[s] < 0:
        bs = b[s]
        a = [ai + bs for ai in a]
        b = [bj - bs for bj in b]
    if min(a) < 0 or min(b) < 0:
        raise AssertionError("decomposition has a negative coefficient")
    return tuple(a), tuple(b)


def _units(m: int) -> list[int]:
    return [u for u in range(1, m) if gcd(u, m) == 1]


def nonstandard_witness(ctx) -> ExpVec | None:
    """A nonstandard minimal element of M_n, or None when n has at most two primes."""
    ctx = ctx if isinstance(ctx, NTheoryContext) else _context(int(ctx))
    primes = ctx.primes
    s = len(primes)
    if s <= 2:
        return None
    n0 = ctx.n0
    if s % 2:
        g = [0] * n0
        g[0] = 1
        for u in _units(n0):
            g[u] = 1
    else:
        p = primes[-1]
        rest = n0 // p
        g = [0] * n0
        g[0] = 1
        for v in _units(rest):
            g[v * p] = 1
    return lift(g, ctx.n_prime)
