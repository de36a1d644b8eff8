"""Time the numba kernels against their numpy fallbacks on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]

Both variants are called directly, so CYCLO_NUMBA does not matter here.  Each
row also checks that the two variants return the same answer.
"""
import argparse
import itertools
import time

import numpy as np

from cyclo_constants import _kernels as K
from cyclo_constants.cyclo_derivations import canonical_rotation, delta_matrices
from cyclo_constants.vanishing_sums import (
    enumerate_bounded,
    nonstandard_witness,
    residue_matrix,
    standard_element,
)


def workloads():
    R30 = residue_matrix(30)
    wit = np.array(nonstandard_witness(30), dtype=np.int64)
    std = np.array(standard_element(30, 5, 1), dtype=np.int64) * 2
    members = enumerate_bounded(20, 1)
    order = np.lexsort(members.T[::-1].tolist() + [members.sum(axis=1)])
    cands = np.ascontiguousarray(members[order])
    MD, MY = delta_matrices(4, 4)
    lams = np.array([l for l in itertools.product(range(-4, 5), repeat=4) if canonical_rotation(l)], dtype=np.int64)
    MD6, _ = delta_matrices(5, 6)
    return [
        ("box_has_proper_member witness n=30", "box_has_proper_member", (wit, R30)),
        ("box_has_proper_member 2*E n=30", "box_has_proper_member", (std, R30)),
        ("box_points h=10 bound=2", "box_points", (10, 2)),
        ("filter_minimal n=20 bound=1", "filter_minimal", (cands,)),
        ("rank_modp Delta matrix n=5 r=6", "rank_modp", (MD6, K.PRIME)),
        ("darboux_nullities n=4 r=4", "darboux_nullities", (MD, MY, lams, K.PRIME)),
    ]


def _same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def _time(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'workload':40s} {'numpy [s]':>11s} {'numba [s]':>11s} {'speedup':>8s}  agree")
    for label, name, fargs in workloads():
        nb = getattr(K, name + "_nb")
        npf = getattr(K, name + "_np")
        nb(*fargs)  # compile
        t_nb, r_nb = _time(nb, fargs, args.repeat)
        t_np, r_np = _time(npf, fargs, args.repeat)
        print(f"{label:40s} {t_np:11.4f} {t_nb:11.4f} {t_np / max(t_nb, 1e-9):8.1f}  {_same(r_nb, r_np)}")


if __name__ == "__main__":
    main()
