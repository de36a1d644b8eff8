"""Command-line front end.

Every run prints (or writes) one JSON report: the effective configuration, the
result, and a status.  The text format is a flattened rendering of the same JSON.
Exit codes: 0 ok, 1 usage error, 2 failed internal verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from .constants_builder import (
    FIELD_DELTA_MAX_TERMS,
    VerificationError,
    explore_field_d_e,
    field_generators_delta,
)
from .cyclo_derivations import (
    cyclic_determinant,
    darboux_search,
    default_constants_degree,
    default_darboux_degree,
    field_constants_d_generators,
    poly_constants_delta,
    ring_constants_d_generators,
)
from .cyclotomic_arith import (
    cyclotomic_poly,
    lam_leung_coefficients,
    make_context,
    phi_at_one,
)
from .multipoly import MultiPoly
from .vanishing_sums import enumerate_minimal, in_M, is_minimal, nonstandard_witness
from .verify import mobius_product_oracle, suites_pass, verify_all

COMMANDS = (
    "cyclotomic",
    "minimal-elements",
    "nu-xi",
    "generators-d",
    "constants-delta",
    "field-delta",
    "darboux-search",
    "verify-all",
    "explore",
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    coefficient_bound: int = 3
    max_degree: int | None = None
    output_format: str = "json"
    output_path: str | None = None


def _all_true(checks: dict) -> bool:
    return all(v for k, v in checks.items() if isinstance(v, bool))


def _is_pq(ctx) -> bool:
    return len(ctx.prime_factorization) == 2 and ctx.n_prime == 1


# ---------------------------------------------------------------------------
# commands; each returns (result, ok)

def cmd_cyclotomic(cfg, ctx):
    phi = cyclotomic_poly(ctx.n)
    checks = {"matches_moebius_product": phi.coefficients == mobius_product_oracle(ctx.n)}
    res = {
        "phi": list(phi.coefficients),
        "degree": phi.degree,
        "phi_at_one": phi_at_one(ctx.n),
        "factorization": [list(pe) for pe in ctx.prime_factorization],
        "euler_phi": ctx.phi_n,
        "mobius": ctx.mu_n,
        "xi": ctx.xi_n,
        "m": ctx.m,
    }
    if _is_pq(ctx):
        q, p = ctx.primes
        ll = lam_leung_coefficients(p, q)
        res["lam_leung"] = {"p": p, "q": q, "r": ll.r, "s": ll.s}
        checks["lam_leung_matches"] = list(ll.signs) == list(phi.coefficients)
    res["checks"] = checks
    return res, _all_true(checks)


def _enumerate(cfg, ctx):
    try:
        return enumerate_minimal(ctx, cfg.coefficient_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_minimal_elements(cfg, ctx):
    rep = _enumerate(cfg, ctx)
    res = rep.to_dict()
    elems = set(rep.minimal_elements)
    checks = {"elements_in_M": all(in_M(e, ctx.n) for e in rep.minimal_elements)}
    if rep.enumeration_complete:
        checks["nu_equals_xi"] = rep.nu == ctx.xi_n
    w = nonstandard_witness(ctx)
    if w is not None:
        res["nonstandard_witness"] = list(w)
        res["nonstandard_witness_weight"] = sum(w)
        checks["witness_in_M"] = in_M(w, ctx.n)
        checks["witness_minimal"] = is_minimal(w, ctx.n)
        res["witness_in_elements"] = tuple(w) in elems
    res["checks"] = checks
    return res, _all_true(checks)


def cmd_nu_xi(cfg, ctx):
    rep = _enumerate(cfg, ctx)
    res = {
        "nu": rep.nu,
        "xi": rep.xi,
        "complete": rep.enumeration_complete,
        "all_standard": rep.all_standard,
        "bound": rep.coefficient_bound_used,
    }
    ok = rep.nu == rep.xi if rep.enumeration_complete else True
    return res, ok


def cmd_generators_d(cfg, ctx):
    gen = field_constants_d_generators(ctx)
    res = {"field": gen.to_dict()}
    ok = _all_true(gen.checks)
    try:
        ring = ring_constants_d_generators(ctx, enumerate_minimal(ctx, cfg.coefficient_bound))
        res["ring"] = ring.to_dict()
    except ValueError as exc:
        res["ring"] = {"skipped": str(exc)}
    if ctx.n <= 8:
        res["cyclic_determinant"] = cyclic_determinant(ctx).to_json()
    return res, ok


def cmd_constants_delta(cfg, ctx):
    r = cfg.max_degree
    found = poly_constants_delta(ctx, r)
    n = ctx.n
    v = MultiPoly.monomial(n, (1,) * n, 1, "y")
    expect = [(c * n, v ** c) for c in range(1, r // n + 1)]
    checks = {"only_powers_of_v": found == expect}
    res = {
        "max_degree": r,
        "constants": [{"degree": d, "poly": P.to_json()} for d, P in found],
        "checks": checks,
    }
    return res, _all_true(checks)


def cmd_field_delta(cfg, ctx):
    try:
        gens = field_generators_delta(ctx, max_terms=FIELD_DELTA_MAX_TERMS)
    except NotImplementedError as exc:
        raise UsageError(f"{exc}; try the explore command") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = gens.to_dict()
    res["generators"] = ["v"] + [f"f_{j}" for j in range(1, gens.m)]
    return res, gens.ok()


def cmd_darboux_search(cfg, ctx):
    if cfg.max_degree < 1:
        raise UsageError(f"darboux search for n={ctx.n} is beyond the default work budget; pass --max-degree explicitly")
    res = darboux_search(ctx, cfg.max_degree).to_dict()
    return res, res["strict_bounds_hold"]


def cmd_verify_all(cfg, ctx):
    suites = verify_all(ctx.n, cfg.coefficient_bound, cfg.max_degree)
    ok = suites_pass(suites)
    return {"suites": suites, "passed": ok}, ok


def cmd_explore(cfg, ctx):
    res = explore_field_d_e(ctx)
    return res, _all_true(res["checks"])


HANDLERS = {
    "cyclotomic": cmd_cyclotomic,
    "minimal-elements": cmd_minimal_elements,
    "nu-xi": cmd_nu_xi,
    "generators-d": cmd_generators_d,
    "constants-delta": cmd_constants_delta,
    "field-delta": cmd_field_delta,
    "darboux-search": cmd_darboux_search,
    "verify-all": cmd_verify_all,
    "explore": cmd_explore,
}


def effective_config(cfg: RunConfig) -> RunConfig:
    """Fill in n-dependent defaults so the report echoes what actually ran."""
    if cfg.max_degree is None:
        if cfg.command == "constants-delta":
            cfg.max_degree = default_constants_degree(cfg.n)
        elif cfg.command == "darboux-search":
            cfg.max_degree = default_darboux_degree(cfg.n)
    return cfg


def run(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.command not in HANDLERS:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.n < 3:
        raise UsageError(f"n must be >= 3, got {cfg.n}")
    if cfg.coefficient_bound < 1:
        raise UsageError("--bound must be >= 1")
    if cfg.max_degree is not None and cfg.max_degree < 1:
        raise UsageError("--max-degree must be >= 1")
    cfg = effective_config(cfg)
    ctx = make_context(cfg.n)
    try:
        result, ok = HANDLERS[cfg.command](cfg, ctx)
    except VerificationError as exc:
        result, ok = {"error": str(exc)}, False
    report = {
        "config": asdict(cfg),
        "result": result,
        "status": "ok" if ok else "verification_failed",
    }
    return (EXIT_OK if ok else EXIT_VERIFY), report


# ---------------------------------------------------------------------------
# rendering

def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _flatten(prefix: str, obj, out: list) -> None:
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], out)
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            _flatten(f"{prefix}[{i}]", x, out)
    else:
        out.append(f"{prefix}: {json.dumps(obj, sort_keys=True)}")


def render_text(report: dict) -> str:
    lines: list = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="cyclo-constants",
        description="Exact constants of the cyclotomic derivations d and Delta.",
        epilog="Exit codes: 0 ok, 1 usage error, 2 failed internal verification. "
        "CYCLO_THREADS caps worker threads; CYCLO_NUMBA=0 selects the pure numpy kernels.",
    )
    p.add_argument("command", choices=COMMANDS, help="computation to run")
    p.add_argument("--n", type=int, required=True, help="order of the roots of unity (>= 3)")
    p.add_argument("--bound", type=int, default=3, dest="coefficient_bound",
                   help="coefficient bound for minimal-element enumeration (default: 3)")
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree cap for constants-delta and darboux-search (default: 2n, lowered to the "
                   "largest degree within the work budget; the effective value is echoed in the report)")
    p.add_argument("--format", choices=("json", "text"), default="json", dest="output_format",
                   help="report format (default: json)")
    p.add_argument("--out", default=None, dest="output_path", help="write the report here (default: stdout)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    if cfg.output_path is not None:
        try:
            with open(cfg.output_path, "a"):
                pass
        except OSError as exc:
            print(f"cyclo-constants: cannot write {cfg.output_path}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    try:
        code, report = run(cfg)
    except UsageError as exc:
        print(f"cyclo-constants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render_json(report) if cfg.output_format == "json" else render_text(report)
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    if code == EXIT_VERIFY:
        print("cyclo-constants: internal verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
