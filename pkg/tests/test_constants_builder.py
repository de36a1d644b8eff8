import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclo_constants.constants_builder import (
    OutsideLocalRing,
    at_exponent,
    at_map,
    at_map_poly,
    best_v_power,
    beta_from_alpha_ee,
    beta_from_alpha_xy,
    field_generators_delta,
    generators_pq,
    generators_prime_power,
    lift_constant,
    lift_constant_detailed,
    n6_display_identity,
    pbar_construction,
    pq_star_identity,
    prime_case_field,
    u_product,
    verify_intertwining,
)
from cyclo_constants.cyclo_derivations import derivation_d, derivation_delta
from cyclo_constants.multipoly import MultiPoly, RatFunc, automorphism_rho, tau_decompose
from cyclo_constants.vanishing_sums import sigma
from cyclo_constants.verify import random_d_constant, random_homogeneous_ratfunc, random_tau_homogeneous


def y(n, *e):
    return MultiPoly.monomial(n, e, 1, "y")


def reference_f4():
    num = y(4, 1, 1, 1, 1) * 2 - y(4, 0, 1, 1, 2) - y(4, 1, 2, 0, 1)
    den = y(4, 0, 1, 1, 0) + y(4, 1, 0, 0, 1) - y(4, 0, 1, 0, 1) * 2
    return RatFunc(num, den)


def test_at_exponent():
    assert at_exponent((1, 0, 0)) == (-1, 1, 0)
    assert at_exponent((1, 1, 1)) == (0, 0, 0)


def test_at_map_of_v_is_one():
    for n in range(3, 8):
        assert at_map(MultiPoly.monomial(n, (1,) * n, 1, "y")) == RatFunc(MultiPoly.constant(n, 1))


def test_outside_local_ring():
    n = 3
    v = y(n, 1, 1, 1)
    with pytest.raises(OutsideLocalRing):
        at_map(RatFunc(y(n, 1, 0, 0), v - 1))


@given(st.sampled_from([3, 4, 5]), st.integers(0, 10**6))
def test_nonzero_homogeneous_never_maps_to_zero(n, seed):
    f = random_homogeneous_ratfunc(n, random.Random(seed))
    if f.num.is_zero():
        return
    assert not at_map_poly(f.num).is_zero()


@given(st.sampled_from([3, 4, 5, 6]), st.integers(0, 10**6))
def test_intertwining_random(n, seed):
    rng = random.Random(seed)
    f = random_homogeneous_ratfunc(n, rng)
    assert verify_intertwining([f], n)


@given(st.integers(3, 9), st.data())
def test_beta_from_alpha_xy_inverts_at(n, data):
    a = data.draw(st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1))
    alpha = tuple(a) + (-sum(a),)
    beta = beta_from_alpha_xy(alpha)
    assert at_exponent(beta) == alpha


@given(st.integers(3, 9), st.data())
def test_beta_from_alpha_ee(n, data):
    b = data.draw(st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1))
    beta0 = tuple(b) + (-sum(b),)
    # alpha = sum_j beta_j (e_{j+1} - e_j)
    alpha = [0] * n
    for j, bj in enumerate(beta0):
        alpha[(j + 1) % n] += bj
        alpha[j] -= bj
    assert sigma(alpha) == 0
    beta = beta_from_alpha_ee(alpha)
    assert sum(beta) == 0
    back = [0] * n
    for j, bj in enumerate(beta):
        back[(j + 1) % n] += bj
        back[j] -= bj
    assert back == alpha


def test_beta_from_alpha_errors():
    with pytest.raises(ValueError):
        beta_from_alpha_ee((1, 0, 0))
    with pytest.raises(ValueError):
        beta_from_alpha_ee((1, -1, 0))
    with pytest.raises(ValueError):
        beta_from_alpha_xy((1, 1, 0))


@given(st.sampled_from([3, 4, 5, 6]), st.integers(0, 10**6))
def test_pbar_postconditions(n, seed):
    rng = random.Random(seed)
    P = random_tau_homogeneous(n, rng, rng.randint(1, 4))
    pb = pbar_construction(P)
    assert all(pb.check().values()), pb.check()


@given(st.sampled_from([3, 4, 6]), st.integers(0, 10**6))
def test_pbar_cofactor_for_d_constants(n, seed):
    P = random_d_constant(n, random.Random(seed))
    assert derivation_d(n).kills(P)
    pb = pbar_construction(P)
    assert pb.cofactor_identity()


def test_pbar_rejects():
    with pytest.raises(ValueError):
        pbar_construction(MultiPoly.zero(3))
    x = lambda *e: MultiPoly.monomial(3, e)  # noqa: E731
    with pytest.raises(ValueError):
        pbar_construction(x(1, 0, 0) + x(0, 1, 0))


def test_best_v_power():
    assert best_v_power((0, 1, 0, 1)) == 0
    assert best_v_power((-2, -1, -1)) == 1
    assert best_v_power((3, 3, 3)) == -3


def test_lift_constant_preconditions_name_the_failure():
    n = 4
    x = lambda *e: MultiPoly.monomial(n, e)  # noqa: E731
    with pytest.raises(ValueError, match="degree zero"):
        lift_constant(RatFunc(x(1, 0, 0, 0), x(2, 0, 0, 0)))
    with pytest.raises(ValueError, match="tau-homogeneous"):
        lift_constant(RatFunc(x(1, 0, 0, 0) + x(0, 1, 0, 0), x(1, 0, 0, 0)))
    with pytest.raises(ValueError, match="d\\(g\\)"):
        lift_constant(RatFunc(x(1, 0, 0, 0), x(0, 1, 0, 0)))
    with pytest.raises(ValueError, match="homogeneous"):
        lift_constant(RatFunc(x(1, 0, 0, 0) + 1, x(1, 0, 0, 0)))


def test_lift_constant_n4_matches_reference():
    gens = field_generators_delta(4)
    f = gens.f[0]
    ref = reference_f4()
    # f = scalar * v^c * ref with c = 0 after canonicalization
    assert f == ref * -1
    assert f.scalar_ratio(ref).to_fraction() == -1
    assert derivation_delta(4).kills(f)
    assert at_map(f) == gens.g[0]


def test_lift_full_check():
    g = field_generators_delta(6).g[1]
    lc = lift_constant_detailed(g, full_check=True)
    assert all(lc.checks.values()), lc.checks


def test_prime_case():
    for n in (3, 5, 7):
        gens = prime_case_field(n)
        assert gens.m == 1 and gens.f == [] and gens.ok()
        assert gens.v == MultiPoly.monomial(n, (1,) * n, 1, "y")
    with pytest.raises(ValueError):
        prime_case_field(6)


@pytest.mark.parametrize("n", [4, 8, 9])
def test_prime_power_generators(n):
    gens = generators_prime_power(n)
    assert gens.ok(), gens.checks
    assert len(gens.f) == gens.m - 1
    for f, g in zip(gens.f, gens.g):
        assert derivation_delta(n).kills(f)
        assert at_map(f) == g


def test_n9_has_two_generators():
    assert len(generators_prime_power(9).f) == 2


@pytest.mark.parametrize("n", [6, 10])
def test_pq_generators(n):
    gens = generators_pq(n)
    assert gens.ok(), gens.checks
    assert len(gens.f) == gens.m - 1


def test_n6_identity_suite():
    out = n6_display_identity()
    assert all(out.values()), out
    F0 = u_product(6, [0, 2, 4])
    comps = dict(tau_decompose(F0))
    assert set(comps) <= {0, 3}
    v0 = comps[0]
    assert F0 == v0 + automorphism_rho(v0)


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (7, 5), (11, 3)])
def test_star_identity(p, q):
    out = pq_star_identity(p, q)
    assert all(v for v in out.values() if isinstance(v, bool)), out


def test_unsupported_n():
    with pytest.raises(NotImplementedError):
        field_generators_delta(30)
    with pytest.raises(ValueError):
        field_generators_delta(21, max_terms=1000)


def test_serialisation_shape():
    d = field_generators_delta(6).to_dict()
    assert {"n", "m", "v", "f", "g", "checks"} <= set(d)
    assert d["m"] == 4 and len(d["f"]) == 3
    assert all(isinstance(v, bool) for v in d["checks"].values())
