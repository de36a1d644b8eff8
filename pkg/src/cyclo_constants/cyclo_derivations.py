"""The derivations d, Delta and E, and their constants.

d(x_j) = x_{j+1} acts diagonally on the u-forms, d(u_j) = eps^(-j) u_j, so a
Laurent u-monomial u^alpha is a constant exactly when alpha lies in G_n.  The
factorisable derivation Delta(y_j) = y_j (y_{j+1} - y_j) is handled through
integer matrices on spaces of homogeneous polynomials.
"""
from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .cyclotomic_arith import NTheoryContext, CycloElem, cyclo_field, make_context
from .linalg import integer_nullspace, rank_exact
from .multipoly import (
    Derivation,
    MultiPoly,
    RatFunc,
    as_ratfunc,
    monomial_ratfunc,
    u_form,
    u_to_x,
)
from .vanishing_sums import (
    MinimalElementReport,
    in_G,
    rotate,
)


def _ctx(ctx) -> NTheoryContext:
    return ctx if isinstance(ctx, NTheoryContext) else make_context(int(ctx))


def derivation_d(ctx, var: str = "x") -> Derivation:
    n = _ctx(ctx).n
    return Derivation([MultiPoly.variable(n, j + 1, var) for j in range(n)], "d")


def derivation_d_u(ctx) -> Derivation:
    """d written in the u-forms: u_j -> eps^(-j) u_j."""
    n = _ctx(ctx).n
    fld = cyclo_field(n)
    return Derivation([MultiPoly.variable(n, j, "u").scale(fld.zeta(-j)) for j in range(n)], "d")


def derivation_delta(ctx, var: str = "y") -> Derivation:
    n = _ctx(ctx).n
    imgs = []
    for j in range(n):
        yj = MultiPoly.variable(n, j, var)
        imgs.append(yj * MultiPoly.variable(n, j + 1, var) - yj * yj)
    return Derivation(imgs, "Delta")


def derivation_euler(ctx, var: str = "x") -> Derivation:
    n = _ctx(ctx).n
    return Derivation([MultiPoly.variable(n, j, var) for j in range(n)], "E")


def h_alpha(alpha: Sequence[int], n: int, k: int = 1) -> CycloElem:
    """H_alpha(eps^k)."""
    fld = cyclo_field(n)
    z = fld.zero
    for j, a in enumerate(alpha):
        if a:
            z = z + fld.zeta(j * k) * int(a)
    return z


def d_of_u_monomial(alpha: Sequence[int], ctx) -> CycloElem:
    """The eigenvalue H_alpha(eps^-1) with d(u^alpha) = H_alpha(eps^-1) u^alpha."""
    n = _ctx(ctx).n
    return h_alpha(alpha, n, -1)


def u_monomial_is_constant(alpha: Sequence[int], ctx) -> bool:
    return in_G(alpha, _ctx(ctx).n)


# ---------------------------------------------------------------------------
# cyclic determinant

def cyclic_determinant(ctx) -> MultiPoly:
    """det of the circulant matrix with first row (x_0, ..., x_{n-1})."""
    n = _ctx(ctx).n
    if n <= 8:
        acc: dict = {}
        for perm in itertools.permutations(range(n)):
            # sign by counting inversions via cycle decomposition
            seen = [False] * n
            sign = 1
            for i in range(n):
                if not seen[i]:
                    j, length = i, 0
                    while not seen[j]:
                        seen[j] = True
                        j = perm[j]
                        length += 1
                    if length % 2 == 0:
                        sign = -sign
            e = [0] * n
            for i in range(n):
                e[(perm[i] - i) % n] += 1
            e = tuple(e)
            acc[e] = acc.get(e, 0) + sign
        return MultiPoly.from_terms(n, ((e, c) for e, c in acc.items() if c))
    return cyclic_determinant_via_u(ctx)


def cyclic_determinant_via_u(ctx) -> MultiPoly:
    """The product u_0 u_1 ... u_{n-1} expanded in x (the eigenvalue formula)."""
    n = _ctx(ctx).n
    out = MultiPoly.constant(n, 1)
    for j in range(n):
        out = out * u_form(n, j)
    return out


# ---------------------------------------------------------------------------
# ring and field generators for d

@dataclass
class RingGeneratorsD:
    n: int
    exponents: list
    monomials: list  # MultiPoly over u
    complete: bool

    @property
    def minimal_claimed(self) -> bool:
        return self.complete

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "complete": self.complete,
            "count": len(self.exponents),
            "u_exponents": [list(e) for e in self.exponents],
        }


def ring_constants_d_generators(ctx, report: MinimalElementReport) -> RingGeneratorsD:
    """The u-monomials u^beta for the minimal beta of M_n."""
    n = _ctx(ctx).n
    if report.n != n:
        raise ValueError(f"report is for n={report.n}, not n={n}")
    mons = [MultiPoly.monomial(n, b, 1, "u") for b in report.minimal_elements]
    return RingGeneratorsD(n, list(report.minimal_elements), mons, report.enumeration_complete)


@dataclass
class GeneratorSetD:
    n: int
    m: int
    gamma: list
    w: list  # RatFunc over u
    common_degree: int
    checks: dict = field(default_factory=dict)

    def to_dict(self, with_x: bool = False) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "common_degree": self.common_degree,
            "gamma": [list(g) for g in self.gamma],
            "w_u": [w.to_json() for w in self.w],
            "checks": dict(sorted(self.checks.items())),
        }
        if with_x:
            out["w_x"] = [u_to_x(w).to_json() for w in self.w]
        return out


def jacobian_u_monomials(gammas: Sequence[Sequence[int]], point: Sequence) -> list[list]:
    """Rows d(u^gamma)/du_i at a point with nonzero coordinates."""
    rows = []
    for g in gammas:
        val = Fraction(1)
        for i, a in enumerate(g):
            val *= Fraction(point[i]) ** a
        rows.append([val * a / Fraction(point[i]) for i, a in enumerate(g)])
    return rows


def field_constants_d_generators(ctx) -> GeneratorSetD:
    ctx = _ctx(ctx)
    n, phi = ctx.n, ctx.phi_n
    m = n - phi
    c = cyclo_field(n).modulus
    gamma0 = tuple(c) + (0,) * (m - 1)
    gammas = [rotate(gamma0, j) for j in range(m)]
    w = [monomial_ratfunc(n, g, 1, "u") for g in gammas]
    du = derivation_d_u(ctx)
    checks = {}
    checks["d_w_zero"] = all(du.kills(wj) for wj in w)
    checks["h_gamma_is_phi_shift"] = all(
        list(g) == [0] * j + list(c) + [0] * (m - 1 - j) and in_G(g, n) for j, g in enumerate(gammas)
    )
    # upper m x m block of [dw_j/du_i]: entry (j, i) carries gamma_j[i] = c_{i-j}
    tri = all(gammas[j][i] == 0 for j in range(m) for i in range(j))
    diag = all(gammas[j][j] != 0 for j in range(m))
    checks["jacobian_upper_triangular"] = tri and diag
    point = _prime_point(n)
    checks["jacobian_rank_m"] = rank_exact(jacobian_u_monomials(gammas, point)) == m
    degs = {sum(g) for g in gammas}
    common = degs.pop() if len(degs) == 1 else None
    checks["common_degree_is_phi_at_1"] = common == sum(c)
    return GeneratorSetD(n, m, gammas, w, common if common is not None else -1, checks)


def _prime_point(n: int, shift: int = 0) -> list[int]:
    out, k = [], 2
    while len(out) < n:
        if all(k % p for p in range(2, int(k ** 0.5) + 1)):
            out.append(k + shift)
        k += 1
    return out


# ---------------------------------------------------------------------------
# Darboux machinery for Delta

@lru_cache(maxsize=None)
def monomial_basis(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Degree-r exponent vectors in n variables, graded-lex descending."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def delta_matrices(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer matrices of Delta and of multiplication by each y_i, degree r -> r+1."""
    src = monomial_basis(n, r)
    dst = monomial_basis(n, r + 1)
    idx = {e: k for k, e in enumerate(dst)}
    MD = np.zeros((len(dst), len(src)), dtype=np.int64)
    MY = np.zeros((n, len(dst), len(src)), dtype=np.int64)
    for col, e in enumerate(src):
        for j in range(n):
            up = list(e)
            up[j] += 1
            MY[j, idx[tuple(up)], col] = 1
            a = e[j]
            if a:
                nxt = list(e)
                nxt[(j + 1) % n] += 1
                MD[idx[tuple(nxt)], col] += a
                MD[idx[tuple(up)], col] -= a
    MD.setflags(write=False)
    MY.setflags(write=False)
    return MD, MY


def _poly_from_vector(n: int, r: int, vec: Sequence[int], var: str = "y") -> MultiPoly:
    basis = monomial_basis(n, r)
    return MultiPoly.from_terms(n, ((basis[k], c) for k, c in enumerate(vec) if c), var)


@dataclass
class DarbouxCertificate:
    poly: MultiPoly
    cofactor: MultiPoly
    lam: list
    strict: bool
    gamma_value: CycloElem

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def satisfies_bounds(self) -> bool:
        """Integer cofactor entries in [-deg F, 0], at least two nonzero, Gamma <= -2."""
        if not self.strict or self.poly.is_constant():
            return True
        r = self.degree
        vals = []
        for x in self.lam:
            if not x.is_rational():
                return False
            fx = x.to_fraction()
            if fx.denominator != 1:
                return False
            vals.append(int(fx))
        return (
            all(-r <= v <= 0 for v in vals)
            and sum(1 for v in vals if v) >= 2
            and sum(vals) <= -2
        )

    def to_dict(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "lambda": [x.to_json() for x in self.lam],
            "strict": self.strict,
            "gamma": self.gamma_value.to_json(),
        }


def darboux_certificate(F: MultiPoly, ctx) -> DarbouxCertificate | None:
    n = _ctx(ctx).n
    if not F.terms:
        raise ValueError("Darboux test of the zero polynomial")
    if F.homogeneous_degree() is None:
        raise ValueError("Darboux test needs a homogeneous polynomial")
    D = derivation_delta(n, F.var)
    dF = D.apply_poly(F)
    fld = F.field
    if not dF.terms:
        lam = [fld.zero] * n
    else:
        q = dF.divide_exact(F)
        if q is None or q.homogeneous_degree() != 1:
            return None
        lam = [fld.zero] * n
        for e, c in q.terms.items():
            lam[e.index(1)] = c
    cof = MultiPoly.from_terms(n, ((tuple(int(i == j) for i in range(n)), lam[j]) for j in range(n)), F.var)
    strict = not any(F.content_exponent())
    gamma = fld.zero
    for x in lam:
        gamma = gamma + x
    return DarbouxCertificate(F, cof, lam, strict, gamma)


def poly_constants_delta(ctx, max_degree: int) -> list[tuple[int, MultiPoly]]:
    """Basis of the homogeneous Delta-constants in each degree 1..max_degree."""
    n = _ctx(ctx).n
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    out = []
    for r in range(1, max_degree + 1):
        MD, _ = delta_matrices(n, r)
        if MD.shape[1] - _kernels.rank_modp(MD) == 0:
            continue
        for vec in integer_nullspace(MD):
            P = _poly_from_vector(n, r, vec)
            _, lc = P.leading()
            out.append((r, P.scale(lc.inverse())))
    return out


def canonical_rotation(lam: Sequence[int]) -> bool:
    """True if lam is the lexicographically smallest of its cyclic rotations."""
    t = tuple(lam)
    return all(t <= rotate(t, k) for k in range(1, len(t)))


@dataclass
class DarbouxSearchResult:
    n: int
    max_degree: int
    certificates: list
    eigen_dimensions: dict  # (degree, lambda) -> dimension

    def all_strict_bounded(self) -> bool:
        return all(c.satisfies_bounds() for c in self.certificates)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "eigenspaces": [
                {"degree": r, "lambda": list(lam), "dimension": dim}
                for (r, lam), dim in sorted(self.eigen_dimensions.items())
            ],
            "certificates": [c.to_dict() for c in self.certificates],
            "strict_bounds_hold": self.all_strict_bounded(),
        }


def darboux_search(ctx, max_degree: int) -> DarbouxSearchResult:
    """All Darboux polynomials of Delta up to max_degree, one cyclic class of cofactors at a time.

    For F of degree r the i-th cofactor entry equals alpha_{i-1} - alpha_i where
    alpha is the leading exponent of F in the lex order that starts at y_i, so
    every cofactor lies in the box [-r, r]^n and the search is exhaustive.
    """
    n = _ctx(ctx).n
    certs = []
    dims = {}
    for r in range(1, max_degree + 1):
        MD, MY = delta_matrices(n, r)
        grid = [lam for lam in itertools.product(range(-r, r + 1), repeat=n) if canonical_rotation(lam)]
        lams = np.array(grid, dtype=np.int64)
        nullities = _kernels.darboux_nullities(MD, MY, lams)
        for k in np.nonzero(nullities)[0]:
            lam = tuple(int(x) for x in lams[k])
            M = MD - np.tensordot(np.array(lam, dtype=np.int64), MY, axes=1)
            basis = integer_nullspace(M)
            if not basis:
                continue
            dims[(r, lam)] = len(basis)
            for vec in basis:
                F = _poly_from_vector(n, r, vec)
                cert = darboux_certificate(F, n)
                if cert is None:
                    raise AssertionError(f"eigenvector for lambda={lam} failed the Darboux identity")
                certs.append(cert)
    return DarbouxSearchResult(n, max_degree, certs, dims)


# rough operation count for one degree of the Darboux search; calibrated so the
# default finishes in seconds on a laptop
DARBOUX_BUDGET = 2 * 10**10


def darboux_cost(n: int, r: int) -> int:
    cols = comb(r + n - 1, n - 1)
    rows = comb(r + n, n - 1)
    return (2 * r + 1) ** n // n * cols * cols * rows


def default_darboux_degree(n: int) -> int:
    """Largest r <= 2n whose cumulative search cost stays within DARBOUX_BUDGET; 0 if none does."""
    total, best = 0, 0
    for r in range(1, 2 * n + 1):
        total += darboux_cost(n, r)
        if total > DARBOUX_BUDGET:
            break
        best = r
    return best


CONSTANTS_MAX_COLUMNS = 1500


def default_constants_degree(n: int) -> int:
    """Largest r <= 2n whose monomial space has at most CONSTANTS_MAX_COLUMNS elements (at least 1)."""
    best = 1
    for r in range(1, 2 * n + 1):
        if comb(r + n - 1, n - 1) > CONSTANTS_MAX_COLUMNS:
            break
        best = r
    return best
