"""Integer inner loops: box searches over exponent vectors and linear algebra mod p.

Every kernel exists twice, a numba ``@njit`` version and a pure-numpy version.
The numba path is used when numba imports and ``CYCLO_NUMBA`` is not set to
``0``.  ``CYCLO_THREADS`` caps the numba thread pool.
"""
from __future__ import annotations

import os

import numpy as np

PRIME = 2147483647  # 2^31 - 1, so products of residues fit in int64

_flag = os.environ.get("CYCLO_NUMBA", "1").strip().lower()
_WANT_NUMBA = _flag not in ("0", "false", "no", "off")

# the TBB layer shipped with some wheels is too old and only produces a warning
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

try:
    import numba
    from numba import njit, prange

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and _WANT_NUMBA

if USE_NUMBA:
    _threads = os.environ.get("CYCLO_THREADS")
    if _threads:
        numba.set_num_threads(max(1, min(int(_threads), numba.config.NUMBA_NUM_THREADS)))


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pure numpy implementations

def _modinv_py(a: int, p: int) -> int:
    return pow(int(a), -1, p)


def box_has_proper_member_np(alpha: np.ndarray, R: np.ndarray) -> bool:
    """True if some beta with 0 < beta < alpha (componentwise, beta != alpha) has beta @ R == 0."""
    alpha = np.asarray(alpha, dtype=np.int64)
    idx = np.nonzero(alpha)[0]
    if idx.size == 0:
        return False
    sub = R[idx]
    shape = tuple(int(a) + 1 for a in alpha[idx])
    total = int(np.prod(shape, dtype=np.int64))
    chunk = 1 << 18
    for start in range(0, total, chunk):
        flat = np.arange(start, min(total, start + chunk), dtype=np.int64)
        pts = np.stack(np.unravel_index(flat, shape), axis=1).astype(np.int64)
        hit = ~np.any(pts @ sub, axis=1)
        if hit.any():
            pts = pts[hit]
            w = pts.sum(axis=1)
            if np.any((w > 0) & (w < alpha.sum())):
                return True
    return False


def box_points_np(h: int, bound: int) -> np.ndarray:
    if h == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((bound + 1,) * h).reshape(h, -1).T
    return np.ascontiguousarray(grid, dtype=np.int64)


def filter_minimal_np(cands: np.ndarray) -> np.ndarray:
    """Mask of candidates (sorted by weight, all nonzero) dominating no earlier kept row."""
    keep = np.zeros(len(cands), dtype=np.bool_)
    kept: list[int] = []
    for i in range(len(cands)):
        if kept:
            mins = cands[kept]
            if np.any(np.all(cands[i] >= mins, axis=1)):
                continue
        keep[i] = True
        kept.append(i)
    return keep


def rref_modp_np(A: np.ndarray, p: int = PRIME) -> tuple[np.ndarray, np.ndarray]:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * _modinv_py(A[r, c], p) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            A[mask] = (A[mask] - np.outer(col[mask], A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A, np.array(pivots, dtype=np.int64)


def rank_modp_np(A: np.ndarray, p: int = PRIME) -> int:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * _modinv_py(A[r, c], p) % p
        below = A[r + 1:, c]
        mask = np.nonzero(below)[0] + r + 1
        if mask.size:
            A[mask] = (A[mask] - np.outer(A[mask, c], A[r]) % p) % p
        r += 1
    return r


def darboux_nullities_np(MD: np.ndarray, MY: np.ndarray, lams: np.ndarray, p: int = PRIME) -> np.ndarray:
    out = np.empty(len(lams), dtype=np.int64)
    cols = MD.shape[1]
    for k in range(len(lams)):
        M = MD - np.tensordot(lams[k], MY, axes=1)
        out[k] = cols - rank_modp_np(M % p, p)
    return out


# ---------------------------------------------------------------------------
# numba implementations

if USE_NUMBA:

    @njit(cache=True)
    def _modinv_nb(a, p):
        t, newt = 0, 1
        r, newr = p, a % p
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @njit(cache=True)
    def box_has_proper_member_nb(alpha, R):
        n = alpha.shape[0]
        phi = R.shape[1]
        total = 0
        for i in range(n):
            total += alpha[i]
        if total == 0:
            return False
        cur = np.zeros(n, dtype=np.int64)
        res = np.zeros(phi, dtype=np.int64)
        weight = 0
        while True:
            # odometer increment
            i = 0
            while i < n:
                if cur[i] < alpha[i]:
                    cur[i] += 1
                    weight += 1
                    for k in range(phi):
                        res[k] += R[i, k]
                    break
                else:
                    weight -= cur[i]
                    for k in range(phi):
                        res[k] -= cur[i] * R[i, k]
                    cur[i] = 0
                    i += 1
            if i == n:
                return False
            if weight == total:
                continue
            zero = True
            for k in range(phi):
                if res[k] != 0:
                    zero = False
                    break
            if zero:
                return True

    @njit(cache=True)
    def box_points_nb(h, bound):
        count = 1
        for _ in range(h):
            count *= bound + 1
        out = np.zeros((count, h), dtype=np.int64)
        cur = np.zeros(h, dtype=np.int64)
        # last coordinate moves fastest, matching np.indices
        for row in range(1, count):
            i = h - 1
            while cur[i] == bound:
                cur[i] = 0
                i -= 1
            cur[i] += 1
            for j in range(h):
                out[row, j] = cur[j]
        return out

    @njit(cache=True)
    def filter_minimal_nb(cands):
        k, n = cands.shape
        keep = np.zeros(k, dtype=np.bool_)
        kept = np.empty(k, dtype=np.int64)
        nk = 0
        for i in range(k):
            dominated = False
            for t in range(nk):
                j = kept[t]
                ok = True
                for c in range(n):
                    if cands[i, c] < cands[j, c]:
                        ok = False
                        break
                if ok:
                    dominated = True
                    break
            if not dominated:
                keep[i] = True
                kept[nk] = i
                nk += 1
        return keep

    @njit(cache=True)
    def rref_modp_nb(A0, p):
        A = A0.copy()
        rows, cols = A.shape
        for i in range(rows):
            for j in range(cols):
                A[i, j] = A[i, j] % p
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    tmp = A[r, j]
                    A[r, j] = A[piv, j]
                    A[piv, j] = tmp
            inv = _modinv_nb(A[r, c], p)
            for j in range(c, cols):
                A[r, j] = A[r, j] * inv % p
            for i in range(rows):
                if i != r:
                    f = A[i, c]
                    if f != 0:
                        for j in range(c, cols):
                            A[i, j] = (A[i, j] - f * A[r, j]) % p
            pivots[r] = c
            r += 1
        return A, pivots[:r].copy()

    @njit(cache=True)
    def _rank_modp_inplace(A, p):
        rows, cols = A.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, cols):
                    tmp = A[r, j]
                    A[r, j] = A[piv, j]
                    A[piv, j] = tmp
            inv = _modinv_nb(A[r, c], p)
            for j in range(c, cols):
                A[r, j] = A[r, j] * inv % p
            for i in range(r + 1, rows):
                f = A[i, c]
                if f != 0:
                    for j in range(c, cols):
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
            r += 1
        return r

    @njit(cache=True)
    def rank_modp_nb(A0, p):
        A = A0.copy()
        rows, cols = A.shape
        for i in range(rows):
            for j in range(cols):
                A[i, j] = A[i, j] % p
        return _rank_modp_inplace(A, p)

    @njit(cache=True, parallel=True)
    def darboux_nullities_nb(MD, MY, lams, p):
        k = lams.shape[0]
        nv = MY.shape[0]
        rows, cols = MD.shape
        out = np.empty(k, dtype=np.int64)
        for t in prange(k):
            M = np.empty((rows, cols), dtype=np.int64)
            for i in range(rows):
                for j in range(cols):
                    v = MD[i, j]
                    for a in range(nv):
                        v -= lams[t, a] * MY[a, i, j]
                    M[i, j] = v % p
            out[t] = cols - _rank_modp_inplace(M, p)
        return out


def _pick(name: str):
    return globals()[name + ("_nb" if USE_NUMBA else "_np")]


def box_has_proper_member(alpha, R) -> bool:
    return bool(_pick("box_has_proper_member")(np.asarray(alpha, dtype=np.int64), np.asarray(R, dtype=np.int64)))


def box_points(h: int, bound: int) -> np.ndarray:
    return _pick("box_points")(int(h), int(bound))


def filter_minimal(cands) -> np.ndarray:
    return _pick("filter_minimal")(np.ascontiguousarray(cands, dtype=np.int64))


def rref_modp(A, p: int = PRIME):
    return _pick("rref_modp")(np.ascontiguousarray(A, dtype=np.int64), p)


def rank_modp(A, p: int = PRIME) -> int:
    return int(_pick("rank_modp")(np.ascontiguousarray(A, dtype=np.int64), p))


def darboux_nullities(MD, MY, lams, p: int = PRIME) -> np.ndarray:
    return _pick("darboux_nullities")(
        np.ascontiguousarray(MD, dtype=np.int64),
        np.ascontiguousarray(MY, dtype=np.int64),
        np.ascontiguousarray(lams, dtype=np.int64),
        p,
    )
