"""Invariant suites run by `verify-all`, plus the seeded random generators they share with the tests."""
from __future__ import annotations

import random
from .constants_builder import (
    at_map,
    explore_field_d_e,
    field_generators_delta,
    field_delta_size,
    FIELD_DELTA_MAX_TERMS,
    OutsideLocalRing,
    n6_display_identity,
    pbar_construction,
    pq_star_identity,
    u_product,
    verify_intertwining,
)
from .cyclo_derivations import (
    cyclic_determinant,
    cyclic_determinant_via_u,
    darboux_search,
    default_constants_degree,
    default_darboux_degree,
    derivation_d,
    derivation_delta,
    field_constants_d_generators,
    poly_constants_delta,
)
from .cyclotomic_arith import (
    _int_poly_divmod_monic,
    _int_poly_mul,
    NTheoryContext,
    cyclo_field,
    cyclotomic_poly,
    divisors,
    euler_phi,
    lam_leung_coefficients,
    make_context,
    mobius,
    phi_at_one,
)
from .multipoly import MultiPoly, RatFunc, automorphism_tau
from .vanishing_sums import (
    MAX_HALF_BOX,
    enumerate_minimal,
    in_G,
    in_G_by_division,
    in_G_by_evaluation,
    is_minimal,
    nonstandard_witness,
    standard_minimal_elements,
)

SEED = 20240611


# ---------------------------------------------------------------------------
# oracles and generators

def mobius_product_oracle(n: int) -> tuple[int, ...]:
    """Phi_n as prod_{d | n} (t^d - 1)^mu(n/d)."""
    num, den = [1], [1]
    for d in divisors(n):
        mu = mobius(n // d)
        if not mu:
            continue
        f = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _int_poly_mul(num, f)
        else:
            den = _int_poly_mul(den, f)
    # den is monic up to sign (-1)^k; normalize before dividing
    sign = den[-1]
    q, r = _int_poly_divmod_monic(num, [c * sign for c in den])
    if any(r):
        raise ArithmeticError("Moebius product did not divide exactly")
    return tuple(c * sign for c in q)


def random_poly(n: int, rng: random.Random, var: str = "y", max_degree: int = 3, terms: int = 3) -> MultiPoly:
    items = []
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        items.append((tuple(e), rng.choice([-3, -2, -1, 1, 2, 3])))
    P = MultiPoly.from_terms(n, items, var)
    return P if P.terms else MultiPoly.constant(n, 1, var)


def random_ratfunc(n: int, rng: random.Random, var: str = "y") -> RatFunc:
    """A random y-function whose denominator survives the @ substitution."""
    while True:
        num = random_poly(n, rng, var)
        den = random_poly(n, rng, var, max_degree=2, terms=2)
        f = RatFunc(num, den)
        try:
            at_map(f)
        except OutsideLocalRing:
            continue
        return f


def random_homogeneous_poly(n: int, rng: random.Random, degree: int, var: str = "y", terms: int = 3) -> MultiPoly:
    items = []
    for _ in range(terms):
        e = [0] * n
        for _ in range(degree):
            e[rng.randrange(n)] += 1
        items.append((tuple(e), rng.choice([-3, -2, -1, 1, 2, 3])))
    P = MultiPoly.from_terms(n, items, var)
    return P if P.terms else random_homogeneous_poly(n, rng, degree, var, terms)


def random_homogeneous_ratfunc(n: int, rng: random.Random, var: str = "y") -> RatFunc:
    while True:
        f = RatFunc(random_homogeneous_poly(n, rng, rng.randint(0, 3), var), random_homogeneous_poly(n, rng, rng.randint(0, 2), var))
        try:
            at_map(f)
        except OutsideLocalRing:
            continue
        return f


def random_tau_homogeneous(n: int, rng: random.Random, degree: int, var: str = "x", terms: int = 4) -> MultiPoly:
    """Random polynomial, homogeneous of the given degree, all monomials sharing one tau-degree."""
    s = None
    items = []
    tries = 0
    while len(items) < terms and tries < 200:
        tries += 1
        e = [0] * n
        for _ in range(degree):
            e[rng.randrange(n)] += 1
        t = sum(j * a for j, a in enumerate(e)) % n
        if s is None:
            s = t
        if t == s:
            items.append((tuple(e), rng.choice([-2, -1, 1, 2, 3])))
    P = MultiPoly.from_terms(n, items, var)
    return P if P.terms else random_tau_homogeneous(n, rng, degree, var, terms)


def random_d_constant(n: int, rng: random.Random, pieces: int = 1) -> MultiPoly:
    """A tau-component of u^gamma with gamma a sum of standard minimal elements, hence a d-constant."""
    from .multipoly import tau_decompose

    # cosets of the smallest prime keep the expansion small
    p = min(p for p in range(2, n + 1) if n % p == 0)
    idx = []
    for _ in range(pieces):
        i = rng.randrange(n // p)
        idx.extend(i + j * (n // p) for j in range(p))
    comps = tau_decompose(u_product(n, idx))
    return comps[rng.randrange(len(comps))][1]


# ---------------------------------------------------------------------------
# suites

def suite_cyclotomic(ctx: NTheoryContext) -> dict:
    n = ctx.n
    phi = cyclotomic_poly(n)
    fld = cyclo_field(n)
    z = fld.zeta(1)
    unit_sum = fld.zero
    for k in range(1, n + 1):
        if all(k % p for p in ctx.primes):
            unit_sum = unit_sum + fld.zeta(k)
    out = {
        "division_matches_moebius_oracle": phi.coefficients == mobius_product_oracle(n),
        "degree_is_phi": phi.degree == euler_phi(n),
        "value_at_one": phi(1) == phi_at_one(n),
        "zeta_has_order_n": z ** n == fld.one and all(z ** k != fld.one for k in divisors(n)[:-1]),
        "sum_of_primitive_roots_is_mobius": unit_sum == fld.from_int(mobius(n)),
    }
    if len(ctx.prime_factorization) == 2 and ctx.n_prime == 1:
        q, p = ctx.primes
        ll = lam_leung_coefficients(p, q)
        out["lam_leung_matches"] = all(ll.coefficient(k) == c for k, c in enumerate(phi.coefficients))
    return out


def suite_vanishing_sums(ctx: NTheoryContext, bound: int, rng: random.Random) -> dict:
    n = ctx.n
    std = standard_minimal_elements(ctx)
    out = {
        "standard_in_M": all(in_G(e, n) for e in std),
        "standard_minimal": all(is_minimal(e, n) for e in std),
    }
    agree = True
    for _ in range(30):
        v = [rng.randint(-2, 2) for _ in range(n)]
        a, b, c = in_G(v, n), in_G_by_division(v, n), in_G_by_evaluation(v, n)
        agree = agree and a == b == c
    for e in std[:10]:
        agree = agree and in_G_by_division(e, n) and in_G_by_evaluation(e, n)
    out["membership_procedures_agree"] = agree
    if len(ctx.primes) <= 2:
        rep = enumerate_minimal(ctx, bound)
        out["nu_equals_xi"] = rep.nu == ctx.xi_n
        out["complete"] = rep.enumeration_complete
        if ctx.n_prime > 1:
            base = enumerate_minimal(ctx.n0, bound)
            out["nu_is_n_prime_times_nu_n0"] = rep.nu == ctx.n_prime * base.nu
        # independent count from the bounded enumeration when it is small enough
        if n <= 24 and (3 if n <= 12 else 2) ** (n - n // 2) <= MAX_HALF_BOX:
            from .vanishing_sums import enumerate_bounded, minimal_from_members

            b = 2 if n <= 12 else 1
            brute = minimal_from_members(enumerate_bounded(n, b))
            out["bounded_enumeration_agrees"] = set(brute) == set(rep.minimal_elements)
    else:
        g = nonstandard_witness(ctx)
        out["witness_in_M"] = in_G(g, n) and min(g) >= 0
        out["witness_minimal"] = is_minimal(g, n)
        out["witness_nonstandard"] = g not in set(std)
    return out


def suite_d_constants(ctx: NTheoryContext) -> dict:
    gen = field_constants_d_generators(ctx)
    out = dict(gen.checks)
    d = derivation_d(ctx.n)
    det = cyclic_determinant(ctx) if ctx.n <= 8 else None
    if det is not None:
        out["cyclic_determinant_is_constant"] = d.kills(det)
        out["cyclic_determinant_matches_u_product"] = det == cyclic_determinant_via_u(ctx)
    return out


def suite_delta(ctx: NTheoryContext, max_degree: int | None, rng: random.Random) -> dict:
    n = ctx.n
    r = max_degree or default_constants_degree(n)
    found = poly_constants_delta(ctx, r)
    v = MultiPoly.monomial(n, (1,) * n, 1, "y")
    expect = [(c * n, v ** c) for c in range(1, r // n + 1)]
    out = {
        "delta_v_zero": derivation_delta(n).kills(v),
        "constants_are_powers_of_v": found == expect,
    }
    dr = min(default_darboux_degree(n), 3)
    if dr:
        out["darboux_strict_bounds"] = darboux_search(ctx, dr).all_strict_bounded()
    else:
        out["skipped"] = "darboux search beyond the default work budget"
    samples = [random_ratfunc(n, rng) for _ in range(10)]
    out["intertwining"] = verify_intertwining(samples, ctx)
    ok = True
    for _ in range(5):
        f = random_homogeneous_ratfunc(n, rng)
        g = at_map(f)
        deg = f.num.homogeneous_degree() - f.den.homogeneous_degree()
        ok = ok and automorphism_tau(g) == g * g.field.zeta(deg % n)
    out["tau_degree_of_at_is_degree"] = ok
    return out


def suite_pbar(ctx: NTheoryContext, rng: random.Random, count: int = 5) -> dict:
    n = ctx.n
    post = True
    cof = True
    for _ in range(count):
        P = random_tau_homogeneous(n, rng, rng.randint(1, 3))
        post = post and all(pbar_construction(P).check().values())
        Q = random_d_constant(n, rng)
        pb = pbar_construction(Q)
        post = post and all(pb.check().values())
        cof = cof and pb.cofactor_identity()
    return {"pbar_postconditions": post, "pbar_cofactor_identity": cof}


def suite_field_delta(ctx: NTheoryContext) -> dict:
    n = ctx.n
    supported = ctx.is_prime_power or (len(ctx.prime_factorization) == 2 and ctx.n_prime == 1)
    if not supported:
        rep = explore_field_d_e(ctx)
        return {f"explore_{k}": v for k, v in rep["checks"].items()}
    size = field_delta_size(ctx)
    if size > FIELD_DELTA_MAX_TERMS:
        return {"skipped": f"product of u-forms has up to {size} terms (limit {FIELD_DELTA_MAX_TERMS})"}
    out = dict(field_generators_delta(ctx).checks)
    if n == 6:
        out.update({f"display_{k}": v for k, v in n6_display_identity().items()})
    if len(ctx.prime_factorization) == 2:
        q, p = ctx.primes
        out.update({f"star_{k}": v for k, v in pq_star_identity(p, q).items() if isinstance(v, bool)})
    return out


def verify_all(n: int, bound: int = 3, max_degree: int | None = None, seed: int = SEED) -> dict:
    """Run every suite for n; a suite is a dict of named booleans or {"skipped": reason}."""
    ctx = make_context(n)
    rng = random.Random(seed + n)
    bound_ok = len(ctx.primes) <= 2 or (bound + 1) ** (ctx.n0 - ctx.n0 // 2) <= MAX_HALF_BOX
    suites = {
        "cyclotomic_arith": suite_cyclotomic(ctx),
        "vanishing_sums": suite_vanishing_sums(ctx, bound, rng) if bound_ok else {"skipped": "bounded enumeration too large"},
        "cyclo_derivations_d": suite_d_constants(ctx),
        "cyclo_derivations_delta": suite_delta(ctx, max_degree, rng),
        "pbar": suite_pbar(ctx, rng),
        "constants_builder": suite_field_delta(ctx),
    }
    return suites


def suites_pass(suites: dict) -> bool:
    return all(all(v for k, v in s.items() if k != "skipped") for s in suites.values())
