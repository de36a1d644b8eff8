"""Rational constants of Delta built from constants of d.

The substitution @ : y_j -> x_{j+1}/x_j sends the Delta-constants onto the
degree-zero d-constants.  Going back requires a lift: for a tau-homogeneous
polynomial P the construction below produces a polynomial Pbar in y and an
exponent lambda with @(Pbar) = x^(-lambda) P, and a quotient of two such
lifts, corrected by a y-monomial, is a Delta-constant mapping onto P/Q.

Generator sets are assembled for n prime, n a prime power and n = pq.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .cyclotomic_arith import CycloElem, NTheoryContext, cyclo_field, lam_leung_coefficients, make_context
from .cyclo_derivations import derivation_d, derivation_delta, _prime_point
from .linalg import rank_exact
from .multipoly import (
    MultiPoly,
    RatFunc,
    as_ratfunc,
    automorphism_rho,
    automorphism_tau,
    monomial_ratfunc,
    tau_decompose,
    u_form,
    u_to_x,
)
from .vanishing_sums import rotate, sigma


class OutsideLocalRing(ValueError):
    """The denominator is killed by the substitution y_j -> x_{j+1}/x_j."""


class VerificationError(AssertionError):
    pass


def _ctx(ctx) -> NTheoryContext:
    return ctx if isinstance(ctx, NTheoryContext) else make_context(int(ctx))


# ---------------------------------------------------------------------------
# the @ map

def at_exponent(alpha: Sequence[int]) -> tuple[int, ...]:
    """Exponent of @(y^alpha) = x^beta: beta_j = alpha_{j-1} - alpha_j."""
    n = len(alpha)
    return tuple(alpha[j - 1] - alpha[j] for j in range(n))


def at_map_poly(P: MultiPoly) -> MultiPoly:
    """@ applied to a y-polynomial; the result is a Laurent polynomial in x."""
    return P.map_exponents(at_exponent, var="x")


def at_map(f) -> RatFunc:
    f = as_ratfunc(f)
    num = at_map_poly(f.num)
    den = at_map_poly(f.den)
    if not den.terms:
        raise OutsideLocalRing("denominator vanishes under y_j -> x_{j+1}/x_j")
    return RatFunc(num, den)


def verify_intertwining(samples: Sequence, ctx) -> bool:
    """d(@(f)) == @(Delta(f)) for every sample."""
    n = _ctx(ctx).n
    d = derivation_d(n)
    delta = derivation_delta(n)
    for f in samples:
        f = as_ratfunc(f)
        lhs = d.apply(at_map(f))
        rhs = at_map(delta.apply(f))
        if not lhs == rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# exponent bookkeeping

def beta_from_alpha_ee(alpha: Sequence[int]) -> tuple[int, ...]:
    """beta with |beta| = 0 and alpha = sum_j beta_j (e_{j+1} - e_j)."""
    n = len(alpha)
    if sum(alpha) != 0:
        raise ValueError("need |alpha| = 0")
    if sigma(alpha) != 0:
        raise ValueError("need sigma(alpha) = 0 mod n")
    num = -(n * alpha[0] + sum(j * a for j, a in enumerate(alpha)))
    r = num // n
    beta = [r]
    acc = r
    for j in range(1, n):
        acc -= alpha[j]
        beta.append(acc)
    return tuple(beta)


def beta_from_alpha_xy(alpha: Sequence[int]) -> tuple[int, ...]:
    """beta with @(y^beta) = x^alpha, for |alpha| = 0."""
    n = len(alpha)
    if sum(alpha) != 0:
        raise ValueError("need |alpha| = 0")
    beta = [0] * n
    acc = 0
    for j in range(n - 3, -1, -1):
        acc += alpha[j + 1]
        beta[j] = acc
    beta[n - 2] = 0
    beta[n - 1] = -alpha[n - 1]
    return tuple(beta)


def linear_form(n: int, coeffs: Sequence, var: str = "y") -> MultiPoly:
    return MultiPoly.from_terms(
        n, ((tuple(int(i == j) for i in range(n)), coeffs[j]) for j in range(n) if coeffs[j]), var
    )


def monomial_cofactor(beta: Sequence[int]) -> list[int]:
    """Coefficients of Delta(y^beta)/y^beta = sum_j beta_j (y_{j+1} - y_j)."""
    n = len(beta)
    return [beta[j - 1] - beta[j] for j in range(n)]


@dataclass
class PBar:
    lam: tuple[int, ...]
    pbar: MultiPoly
    source: MultiPoly

    def check(self) -> dict:
        """The postconditions @(Pbar) = x^(-lam) P, |lam| = deg P, lam >= 0, no variable divides Pbar."""
        P = self.source
        back = at_map_poly(self.pbar).shift(self.lam)
        return {
            "at_identity": back.terms == P.terms,
            "lambda_weight": sum(self.lam) == P.degree(),
            "lambda_nonnegative": min(self.lam) >= 0,
            "no_variable_divides": not any(self.pbar.content_exponent()),
        }

    def cofactor_identity(self) -> bool:
        """Delta(Pbar) = -(sum lam_i y_i) Pbar."""
        n = self.pbar.n
        lhs = derivation_delta(n).apply_poly(self.pbar)
        rhs = linear_form(n, [-a for a in self.lam]) * self.pbar
        return lhs == rhs


def pbar_construction(P: MultiPoly, ctx=None) -> PBar:
    if not P.terms:
        raise ValueError("Pbar of the zero polynomial")
    if P.homogeneous_degree() is None or P.tau_degree() is None:
        raise ValueError("Pbar needs a tau-homogeneous polynomial")
    if not P.is_polynomial():
        raise ValueError("Pbar needs an ordinary polynomial")
    n = P.n
    terms = P.sorted_terms()
    g1 = terms[0][0]
    betas = [beta_from_alpha_ee(tuple(a - b for a, b in zip(e, g1))) for e, _ in terms]
    alpha = [min(b[j] for b in betas) for j in range(n)]
    lam = list(g1)
    for j in range(n):
        lam[(j + 1) % n] += alpha[j]
        lam[j] -= alpha[j]
    pbar = MultiPoly(
        n,
        {tuple(b[j] - alpha[j] for j in range(n)): c for b, (_, c) in zip(betas, terms)},
        P.field,
        "y",
    )
    return PBar(tuple(lam), pbar, P)


# ---------------------------------------------------------------------------
# lifting one constant

@dataclass
class LiftedConstant:
    """f = y^beta * Pbar / Qbar with @(f) = g."""

    g: RatFunc
    beta: tuple[int, ...]
    top: PBar
    bottom: PBar
    checks: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.beta)

    @property
    def f(self) -> RatFunc:
        n = self.n
        pos = tuple(max(b, 0) for b in self.beta)
        neg = tuple(max(-b, 0) for b in self.beta)
        return RatFunc(self.top.pbar.shift(pos), self.bottom.pbar.shift(neg))

    def log_gradient(self, point: Sequence) -> list:
        """Row of d log f / dy_i at a point."""
        n = self.n
        fld = self.top.pbar.field
        P, Q = self.top.pbar, self.bottom.pbar
        Pv, Qv = P.evaluate(point), Q.evaluate(point)
        if not Pv or not Qv:
            raise ZeroDivisionError("lift vanishes at the point")
        row = []
        for i in range(n):
            val = fld.from_rational(Fraction(self.beta[i]) / Fraction(point[i]))
            val = val + P.diff(i).evaluate(point) / Pv - Q.diff(i).evaluate(point) / Qv
            row.append(val)
        return row


def _split_quotient(g: RatFunc) -> tuple[MultiPoly, MultiPoly]:
    return g.num, g.den


def best_v_power(beta: Sequence[int]) -> int:
    """c minimizing sum |beta_j + c|; ties go to the largest c."""
    s = sorted(beta)
    n = len(s)
    # any c in [-s[(n-1)//2], -s[n//2]] minimizes the sum
    return -s[(n - 1) // 2]


def lift_constant_detailed(g, ctx=None, verify: bool = True, full_check: bool = False) -> LiftedConstant:
    g = as_ratfunc(g)
    n = g.n
    P, Q = _split_quotient(g)
    if P.homogeneous_degree() is None or Q.homogeneous_degree() is None:
        raise ValueError("lift_constant: numerator and denominator must be homogeneous")
    if P.homogeneous_degree() != Q.homogeneous_degree():
        raise ValueError("lift_constant: g is not of degree zero (E(g) != 0)")
    if P.tau_degree() is None or Q.tau_degree() is None:
        raise ValueError("lift_constant: g is not tau-homogeneous")
    d = derivation_d(n)
    dP, dQ = d.apply_poly(P), d.apply_poly(Q)
    if dP.terms or dQ.terms:
        if not dP * Q == P * dQ:
            raise ValueError("lift_constant: d(g) != 0")
    top = pbar_construction(P)
    bottom = pbar_construction(Q)
    beta = beta_from_alpha_xy(tuple(a - b for a, b in zip(top.lam, bottom.lam)))
    c = best_v_power(beta)
    beta = tuple(b + c for b in beta)
    out = LiftedConstant(g, beta, top, bottom)
    if verify:
        out.checks = verify_lift(out, full_check=full_check)
        if not all(out.checks.values()):
            failed = [k for k, v in out.checks.items() if not v]
            raise VerificationError(f"lift postconditions failed: {failed}")
    return out


def verify_lift(lc: LiftedConstant, full_check: bool = False) -> dict:
    n = lc.n
    checks = {}
    tc, bc = lc.top.check(), lc.bottom.check()
    checks["pbar_postconditions"] = all(tc.values()) and all(bc.values())
    # @(y^beta) = x^(lam - mu) and the two Pbar identities give @(f) = P/Q
    checks["at_f_equals_g"] = (
        checks["pbar_postconditions"]
        and at_exponent(lc.beta) == tuple(a - b for a, b in zip(lc.top.lam, lc.bottom.lam))
    )
    # Delta(f)/f = cof(y^beta) + cof(Pbar) - cof(Qbar) must vanish
    top_ok = lc.top.cofactor_identity()
    bottom_ok = lc.bottom.cofactor_identity()
    mono = monomial_cofactor(lc.beta)
    total = [mono[i] - lc.top.lam[i] + lc.bottom.lam[i] for i in range(n)]
    checks["delta_f_zero"] = top_ok and bottom_ok and not any(total)
    checks["f_homogeneous"] = lc.f.num.homogeneous_degree() is not None and lc.f.den.homogeneous_degree() is not None
    if full_check:
        f = lc.f
        checks["delta_f_zero_direct"] = derivation_delta(n).kills(f)
        checks["at_f_equals_g_direct"] = at_map(f) == lc.g
    return checks


def lift_constant(g, ctx=None) -> RatFunc:
    """A homogeneous Delta-constant f with @(f) = g."""
    g = as_ratfunc(g)
    if g.is_constant():
        return RatFunc(MultiPoly.constant(g.n, g.num.constant_value() / g.den.constant_value(), "y"))
    return lift_constant_detailed(g, ctx).f


# ---------------------------------------------------------------------------
# generator sets

def v_poly(n: int) -> MultiPoly:
    return MultiPoly.monomial(n, (1,) * n, 1, "y")


def u_product(n: int, indices: Sequence[int]) -> MultiPoly:
    """prod u_i for i in indices, expanded in x."""
    out = MultiPoly.constant(n, 1)
    for i in indices:
        out = out * u_form(n, i % n)
    return out


def u_exponent(n: int, indices: Sequence[int]) -> tuple[int, ...]:
    e = [0] * n
    for i in indices:
        e[i % n] += 1
    return tuple(e)


@dataclass
class FieldGeneratorsDelta:
    n: int
    m: int
    v: MultiPoly
    lifts: list  # LiftedConstant
    g: list  # RatFunc over x
    independence_witness: dict
    checks: dict
    details: dict = field(default_factory=dict)

    @property
    def f(self) -> list:
        return [lc.f for lc in self.lifts]

    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "v": self.v.to_json(),
            "f": [f.to_json() for f in self.f],
            "g": [g.to_json() for g in self.g],
            "independence_witness": self.independence_witness,
            "checks": dict(sorted(self.checks.items())),
            "details": self.details,
        }


def independence_witness(lifts: Sequence[LiftedConstant], n: int, attempts: int = 8) -> dict:
    """Rank of the Jacobian of (v, f_1, ...) at (2, 3, 5, ...) shifted by k = 0, 1, ..."""
    want = 1 + len(lifts)
    last = None
    for k in range(attempts):
        point = _prime_point(n, k)
        fld = cyclo_field(n)
        rows = [[fld.from_rational(Fraction(1, p)) for p in point]]
        try:
            for lc in lifts:
                rows.append(lc.log_gradient(point))
        except ZeroDivisionError:
            continue
        rank = rank_exact(rows)
        last = {"point": point, "rank": rank, "expected": want, "attempt": k}
        if rank == want:
            return last
    return last or {"point": None, "rank": 0, "expected": want, "attempt": attempts}


def _component_map(P: MultiPoly) -> dict[int, MultiPoly]:
    return {s: c for s, c in tau_decompose(P)}


def _read_sign(component: MultiPoly | None, base: MultiPoly) -> CycloElem | None:
    """b with component = b * base, read from one coefficient and checked on all."""
    if component is None:
        return None
    e, c = base.leading()
    if e not in component.terms:
        return None
    b = component.terms[e] / c
    return b if component == base.scale(b) else None


def _decompose_along_rho(P: MultiPoly, step: int, count: int) -> tuple[MultiPoly, list, dict]:
    """P = sum_i b_i rho^i(v0) with tau-degrees i*step; returns v0, [b_i], checks."""
    n = P.n
    comps = _component_map(P)
    allowed = {(i * step) % n for i in range(count)}
    checks = {"tau_degrees_expected": set(comps) <= allowed}
    v0 = comps.get(0)
    if v0 is None:
        raise VerificationError("tau decomposition has no degree-0 component")
    signs = []
    ok = True
    total = MultiPoly.zero(n)
    for i in range(count):
        rv = automorphism_rho(v0, i)
        b = _read_sign(comps.get((i * step) % n), rv)
        if b is None:
            ok = False
            signs.append(None)
            continue
        signs.append(b)
        total = total + rv.scale(b)
    checks["components_are_rho_images"] = ok
    checks["decomposition_sums_back"] = ok and total == P
    return v0, signs, checks


def _lift_all(gs: Sequence[RatFunc]) -> list[LiftedConstant]:
    return [lift_constant_detailed(g) for g in gs]


def _finish(n: int, m: int, lifts, gs, checks: dict, details: dict) -> FieldGeneratorsDelta:
    checks["all_lifts_verified"] = all(all(lc.checks.values()) for lc in lifts)
    checks["generator_count"] = len(lifts) == m - 1
    wit = independence_witness(lifts, n)
    checks["independence_rank"] = wit["rank"] == m
    return FieldGeneratorsDelta(n, m, v_poly(n), lifts, list(gs), wit, checks, details)


def prime_case_field(ctx) -> FieldGeneratorsDelta:
    ctx = _ctx(ctx)
    if not ctx.is_prime:
        raise ValueError(f"n={ctx.n} is not prime")
    n = ctx.n
    checks = {"m_minus_1_is_zero": ctx.m - 1 == 0, "delta_v_zero": derivation_delta(n).kills(v_poly(n))}
    return _finish(n, ctx.m, [], [], checks, {})


def _sign_json(signs: Sequence) -> list:
    return [None if b is None else b.to_json() for b in signs]


def generators_prime_power(ctx) -> FieldGeneratorsDelta:
    ctx = _ctx(ctx)
    if not ctx.is_prime_power or ctx.is_prime:
        raise ValueError(f"n={ctx.n} is not a prime power p^s with s >= 2")
    n = ctx.n
    p = ctx.primes[0]
    m = ctx.m
    fld = cyclo_field(n)
    w0 = u_product(n, [i * m for i in range(p)])
    v0, b, checks = _decompose_along_rho(w0, p, m)
    rw = automorphism_rho(w0)
    checks["rho_w0_is_pm_w0"] = rw == w0 or rw == -w0
    # w_j = tau^j(w_0) = sum_i b_i eps^(pij) rho^i(v0), checked against the product of u-forms
    rhos = [automorphism_rho(v0, i) for i in range(m)]
    ok = True
    for j in range(1, m):
        wj = u_product(n, [i * m + j for i in range(p)])
        rebuilt = MultiPoly.zero(n)
        for i in range(m):
            rebuilt = rebuilt + rhos[i].scale(b[i] * fld.zeta(p * i * j))
        ok = ok and wj == rebuilt
        ok = ok and automorphism_tau(w0, k=j) == wj
    checks["w_j_in_span_of_rho_v0"] = ok
    # the generators lifted are v0 / rho^j(v0), reciprocals of rho^j(v0) / v0
    gs = [RatFunc(v0, rhos[j]) for j in range(1, m)]
    lifts = _lift_all(gs)
    details = {"signs_b": _sign_json(b), "v0_terms": len(v0), "orientation": "v0/rho^j(v0)"}
    return _finish(n, m, lifts, gs, checks, details)


def pq_star_identity(p: int, q: int) -> dict:
    """Exponent-level check of w_0 = prod_{i<=r} F_{ip} / prod_{j<=p-2-s} G_{jq+1}."""
    n = p * q
    ll = lam_leung_coefficients(p, q)
    r, s = ll.r, ll.s
    coeffs = cyclo_field(n).modulus
    A = [k for k, c in enumerate(coeffs) if c == 1]
    B = [k for k, c in enumerate(coeffs) if c == -1]
    N = u_exponent(n, A)
    D = u_exponent(n, B)
    N_ll = u_exponent(n, [i * p + j * q for i in range(r + 1) for j in range(s + 1)])
    D_ll = u_exponent(n, [i * p + j * q + 1 for i in range(q - 1 - r) for j in range(p - 1 - s)])

    def F(i):
        return u_exponent(n, [j * q + i for j in range(p)])

    def G(i):
        return u_exponent(n, [j * p + i for j in range(q)])

    top = [0] * n
    for i in range(r + 1):
        top = [a + b for a, b in zip(top, F(i * p))]
    bot = [0] * n
    for j in range(p - 1 - s):
        bot = [a + b for a, b in zip(bot, G(j * q + 1))]
    S = [a - b for a, b in zip(top, N)]
    T = [a - b for a, b in zip(bot, D)]
    gamma0 = [a - b for a, b in zip(N, D)]
    return {
        "r": r,
        "s": s,
        "N_matches_lam_leung": N == N_ll,
        "D_matches_lam_leung": D == D_ll,
        "S_equals_T": S == T and min(S) >= 0,
        "star_identity": [a - b for a, b in zip(top, bot)] == gamma0,
    }


def generators_pq(ctx) -> FieldGeneratorsDelta:
    ctx = _ctx(ctx)
    if len(ctx.prime_factorization) != 2 or ctx.n_prime != 1:
        raise ValueError(f"n={ctx.n} is not a product of two distinct primes")
    n = ctx.n
    q, p = ctx.primes  # p > q
    m = ctx.m
    fld = cyclo_field(n)
    star = pq_star_identity(p, q)
    checks = {k: v for k, v in star.items() if isinstance(v, bool)}
    F0 = u_product(n, [j * q for j in range(p)])
    G0 = u_product(n, [j * p for j in range(q)])
    v0, bF, cF = _decompose_along_rho(F0, p, q)
    r0, bG, cG = _decompose_along_rho(G0, q, p)
    checks.update({f"F0_{k}": v for k, v in cF.items()})
    checks.update({f"G0_{k}": v for k, v in cG.items()})
    checks["rho_F0_is_pm_F0"] = automorphism_rho(F0) == F0 or automorphism_rho(F0) == -F0
    checks["rho_G0_is_pm_G0"] = automorphism_rho(G0) == G0 or automorphism_rho(G0) == -G0
    rv = [automorphism_rho(v0, i) for i in range(q)]
    rr = [automorphism_rho(r0, j) for j in range(p)]
    ok = True
    for j in range(1, q):
        Fj = u_product(n, [i * q + j for i in range(p)])
        rebuilt = MultiPoly.zero(n)
        for i in range(q):
            rebuilt = rebuilt + rv[i].scale(bF[i] * fld.zeta(p * i * j))
        ok = ok and Fj == rebuilt
    checks["F_j_in_span_of_rho_v0"] = ok
    ok = True
    for j in range(1, p):
        Gj = u_product(n, [i * p + j for i in range(q)])
        rebuilt = MultiPoly.zero(n)
        for i in range(p):
            rebuilt = rebuilt + rr[i].scale(bG[i] * fld.zeta(q * i * j))
        ok = ok and Gj == rebuilt
    checks["G_j_in_span_of_rho_r0"] = ok
    gs = [RatFunc(v0, rv[i]) for i in range(1, q)] + [RatFunc(r0, rr[j]) for j in range(1, p)]
    lifts = _lift_all(gs)
    details = {
        "r": star["r"],
        "s": star["s"],
        "signs_F0": _sign_json(bF),
        "signs_G0": _sign_json(bG),
        "v0_terms": len(v0),
        "r0_terms": len(r0),
        "orientation": "v0/rho^i(v0), r0/rho^j(r0)",
    }
    return _finish(n, m, lifts, gs, checks, details)


def n6_display_identity() -> dict:
    """The expression of w_1/w_0 through g_1, g_2, g_3 for n = 6, checked in x."""
    n = 6
    fld = cyclo_field(n)
    e = fld.zeta
    F0 = u_product(n, [0, 2, 4])
    G0 = u_product(n, [0, 3])
    v0, _, _ = _decompose_along_rho(F0, 3, 2)
    r0, _, _ = _decompose_along_rho(G0, 2, 3)
    rv, rr1, rr2 = automorphism_rho(v0), automorphism_rho(r0), automorphism_rho(r0, 2)
    out = {
        "F0_is_v0_plus_rho_v0": F0 == v0 + rv,
        "F1_is_v0_minus_rho_v0": u_product(n, [1, 3, 5]) == v0 - rv,
        "G0_decomposition": G0 == r0 - rr1 + rr2,
        "G1_decomposition": u_product(n, [1, 4]) == r0 - rr1.scale(e(2)) + rr2.scale(e(4)),
        "G2_decomposition": u_product(n, [2, 5]) == r0 - rr1.scale(e(4)) + rr2.scale(e(2)),
    }
    g1 = RatFunc(rv, v0)
    g2 = RatFunc(rr1, r0)
    g3 = RatFunc(rr2, r0)
    one = RatFunc(MultiPoly.constant(n, 1))
    rhs = (one - g1) * (one - g2 * e(2) + g3 * e(4)) / ((one + g1) * (one - g2 * e(4) + g3 * e(2)))
    w0 = monomial_ratfunc(n, (1, -1, 1, 0, 0, 0), 1, "u")
    w1 = monomial_ratfunc(n, (0, 1, -1, 1, 0, 0), 1, "u")
    lhs = u_to_x(w1 / w0)
    out["w1_over_w0_display"] = lhs == rhs
    F0u = monomial_ratfunc(n, u_exponent(n, [0, 2, 4]), 1, "u")
    G1u = monomial_ratfunc(n, u_exponent(n, [1, 4]), 1, "u")
    out["w0_is_F0_over_G1"] = w0 == F0u / G1u
    return out


FIELD_DELTA_MAX_TERMS = 20000


def field_delta_size(ctx) -> int:
    """Upper bound on the terms of the largest u-form product the construction expands."""
    ctx = _ctx(ctx)
    n = ctx.n
    if ctx.is_prime:
        return 1
    factors = max(ctx.primes) if len(ctx.primes) > 1 else ctx.primes[0]
    return comb(n + factors - 1, factors)


def field_generators_delta(ctx, max_terms: int | None = None) -> FieldGeneratorsDelta:
    """Dispatch on the shape of n; refuses expansions beyond max_terms when given."""
    ctx = _ctx(ctx)
    supported = ctx.is_prime_power or (len(ctx.prime_factorization) == 2 and ctx.n_prime == 1)
    if not supported:
        raise NotImplementedError(
            f"no generator construction for n={ctx.n}; only n prime, a prime power, or pq are covered"
        )
    if max_terms is not None and field_delta_size(ctx) > max_terms:
        raise ValueError(
            f"n={ctx.n}: the u-form products have up to {field_delta_size(ctx)} terms, above the limit {max_terms}"
        )
    if ctx.is_prime:
        return prime_case_field(ctx)
    if ctx.is_prime_power:
        return generators_prime_power(ctx)
    return generators_pq(ctx)


def explore_field_d_e(ctx) -> dict:
    """Degree-zero d-constants w_j/w_0 for any n, with no claim about k(Y)^Delta."""
    from .cyclo_derivations import field_constants_d_generators

    ctx = _ctx(ctx)
    gen = field_constants_d_generators(ctx)
    ratios = []
    for j in range(1, gen.m):
        e = tuple(a - b for a, b in zip(gen.gamma[j], gen.gamma[0]))
        ratios.append(list(e))
    return {
        "n": ctx.n,
        "m": gen.m,
        "prime_divisors": list(ctx.primes),
        "w_ratio_u_exponents": ratios,
        "ratio_count": len(ratios),
        "construction_known": ctx.is_prime_power or (len(ctx.prime_factorization) == 2 and ctx.n_prime == 1),
        "checks": gen.checks,
    }
