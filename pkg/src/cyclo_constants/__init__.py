"""Constants of the cyclotomic derivation d and its factorisable companion Delta.

Everything is exact: integers, Fractions and elements of Q(zeta_n).
"""
from .cyclotomic_arith import (
    CycloElem,
    CycloField,
    CycloPoly,
    LamLeung,
    NTheoryContext,
    cyclo_field,
    cyclotomic_poly,
    euler_phi,
    lam_leung_coefficients,
    make_context,
    mobius,
    xi,
)
from .vanishing_sums import (
    MinimalElementReport,
    enumerate_minimal,
    in_G,
    in_M,
    is_minimal,
    nonstandard_witness,
    nu,
    pq_decompose,
    project_minimal,
)
from .multipoly import Derivation, MultiPoly, RatFunc
from .cyclo_derivations import (
    darboux_certificate,
    darboux_search,
    derivation_d,
    derivation_delta,
    field_constants_d_generators,
    poly_constants_delta,
    ring_constants_d_generators,
)
from .constants_builder import (
    FieldGeneratorsDelta,
    OutsideLocalRing,
    at_map,
    field_generators_delta,
    generators_pq,
    generators_prime_power,
    lift_constant,
    pbar_construction,
    prime_case_field,
    verify_intertwining,
)

__version__ = "0.1.0"
