import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cyclo_constants import _kernels as K
from cyclo_constants.linalg import integer_nullspace, nullspace_exact, rank_exact, rational_reconstruct
from cyclo_constants.vanishing_sums import residue_matrix

needs_numba = pytest.mark.skipif(not K.NUMBA_AVAILABLE, reason="numba not installed")

small_mats = arrays(np.int64, st.tuples(st.integers(1, 7), st.integers(1, 7)), elements=st.integers(-5, 5))


@given(small_mats)
def test_rank_modp_matches_exact(A):
    assert K.rank_modp_np(A) == rank_exact(A.tolist())


@needs_numba
@given(small_mats)
def test_rank_backends_agree(A):
    P = K.PRIME
    assert K.rank_modp_np(A, P) == K.rank_modp_nb(A, P)
    Rn, pn = K.rref_modp_np(A, P)
    Rb, pb = K.rref_modp_nb(A, P)
    assert np.array_equal(Rn, Rb) and list(pn) == list(pb)


@given(small_mats)
def test_integer_nullspace(A):
    basis = integer_nullspace(A)
    assert len(basis) == A.shape[1] - rank_exact(A.tolist())
    for v in basis:
        assert not np.any(A @ np.array(v, dtype=np.int64))
    assert len(nullspace_exact(A.tolist(), A.shape[1])) == len(basis)


def test_rational_reconstruct():
    p = K.PRIME
    for num, den in [(3, 7), (-5, 11), (1, 1), (0, 1), (123, 457)]:
        a = num * pow(den, -1, p) % p
        r = rational_reconstruct(a)
        assert (r.numerator, r.denominator) == (num, den)


@needs_numba
@pytest.mark.parametrize("h,b", [(0, 2), (1, 3), (4, 2), (6, 1)])
def test_box_points_agree(h, b):
    assert np.array_equal(K.box_points_np(h, b), K.box_points_nb(h, b))


@needs_numba
@given(st.sampled_from([6, 10, 12]), st.data())
def test_box_search_agrees(n, data):
    R = residue_matrix(n)
    alpha = np.array(data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)), dtype=np.int64)
    assert K.box_has_proper_member_np(alpha, R) == K.box_has_proper_member_nb(alpha, R)


@needs_numba
@given(arrays(np.int64, st.tuples(st.integers(1, 30), st.just(5)), elements=st.integers(0, 2)))
def test_filter_minimal_agrees(c):
    c = c[c.any(axis=1)]
    if not len(c):
        return
    c = c[np.lexsort(c.T[::-1].tolist() + [c.sum(axis=1)])]
    c = np.ascontiguousarray(c)
    assert np.array_equal(K.filter_minimal_np(c), K.filter_minimal_nb(c))


@needs_numba
def test_darboux_nullities_agree():
    from cyclo_constants.cyclo_derivations import delta_matrices

    MD, MY = delta_matrices(3, 3)
    lams = np.array([[a, b, c] for a in range(-3, 4) for b in range(-3, 4) for c in range(-3, 4)], dtype=np.int64)
    assert np.array_equal(K.darboux_nullities_np(MD, MY, lams, K.PRIME), K.darboux_nullities_nb(MD, MY, lams, K.PRIME))


def _cli(args, env_extra):
    env = dict(os.environ, **env_extra)
    return subprocess.run([sys.executable, "-m", "cyclo_constants", *args], capture_output=True, env=env, check=True).stdout


def test_env_flag_selects_numpy_and_reports_match():
    out = subprocess.run(
        [sys.executable, "-c", "from cyclo_constants import _kernels; print(_kernels.backend())"],
        capture_output=True, text=True, env=dict(os.environ, CYCLO_NUMBA="0"), check=True,
    ).stdout.strip()
    assert out == "numpy"
    args = ["darboux-search", "--n", "3", "--max-degree", "3"]
    assert _cli(args, {"CYCLO_NUMBA": "0"}) == _cli(args, {"CYCLO_NUMBA": "1", "CYCLO_THREADS": "2"})
