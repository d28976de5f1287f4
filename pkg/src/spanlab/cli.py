"""Command-line entry point.

Every subcommand prints a human-readable summary by default and a stable JSON
envelope ``{command, inputs, result, version, seconds}`` with ``--json``.
Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .bounds import (
    check_weight_budget,
    max_hypersurfaces,
    next_hypersurface_bound,
    pluecker_budget,
    quadric_bound,
)
from .errors import SpanlabError
from .jets import (
    JetSystem,
    adapted_basis,
    degree_genus_estimate,
    filtration_profile,
    is_m_maximal,
    sym_power_dim,
)
from .monomial_ideal import (
    NonEquivalent,
    bigraded_dims,
    equivalence_report,
    generation_degree,
    move_trace,
)
from .semigroup import curve_invariants, hilbert_polynomial, semigroup_of, stabilization_threshold
from .sequences import from_text
from .span import classify, power_sumset
from .verify import SUITE_IDS, SweepConfig, run_all, run_suite


def _parse_ints(text: str) -> list[int]:
    return [int(p) for p in text.split(",")]


def _parse_exponents(text: str) -> tuple[int, ...]:
    return tuple(_parse_ints(text))


def _load_sections(path: str) -> JetSystem:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    sections = tuple(tuple(Fraction(str(c)) for c in sec) for sec in raw)
    return JetSystem(sections)


def _cmd_span(args):
    seq = from_text(args.seq)
    table = power_sumset(seq, args.m)
    cls = classify(seq, args.m)
    result = {
        "seq": list(seq.entries),
        "m": args.m,
        "span": cls.span,
        "verdict": cls.verdict.value,
        "step": cls.step,
        "values": list(table.values),
    }
    lines = [f"span of {seq.to_text()} at m={args.m}: {cls.span}"]
    if args.classify:
        lines.append(f"verdict: {cls.verdict.value}" + (f" (step {cls.step})" if cls.step else ""))
    lines.append(f"values: {' '.join(str(v) for v in table.values)}")
    return {"seq": args.seq, "m": args.m}, result, lines


def _cmd_semigroup(args):
    sg = semigroup_of(_parse_ints(args.gens))
    result = {
        "generators": list(sg.generators),
        "gaps": list(sg.gaps),
        "frobenius": sg.frobenius,
    }
    lines = [
        f"semigroup generated by {', '.join(map(str, sg.generators))}",
        f"gaps ({len(sg.gaps)}): {' '.join(map(str, sg.gaps)) or '(none)'}",
        f"frobenius: {sg.frobenius}",
    ]
    return {"gens": args.gens}, result, lines


def _cmd_curve(args):
    seq = from_text(args.seq)
    inv = curve_invariants(seq)
    result = {
        "seq": list(seq.entries),
        "degree": inv.degree,
        "gaps_at_zero": inv.gaps_at_zero,
        "gaps_at_infinity": inv.gaps_at_infinity,
        "arithmetic_genus": inv.arithmetic_genus,
    }
    lines = [
        f"monomial curve of {seq.to_text()}",
        f"degree: {inv.degree}",
        f"gap counts: {inv.gaps_at_zero} at zero, {inv.gaps_at_infinity} at infinity",
        f"arithmetic genus: {inv.arithmetic_genus}",
    ]
    return {"seq": args.seq}, result, lines


def _cmd_hilbert(args):
    seq = from_text(args.seq)
    lead, const = hilbert_polynomial(seq)
    threshold = stabilization_threshold(seq, args.mcap)
    result = {
        "seq": list(seq.entries),
        "leading": lead,
        "constant": const,
        "m_cap": args.mcap,
        "threshold": threshold,
    }
    sign = "+" if const >= 0 else "-"
    lines = [f"eventual span line: {lead}*m {sign} {abs(const)}"]
    if threshold is None:
        lines.append(f"not stabilized up to m_cap={args.mcap}")
    else:
        lines.append(f"stabilizes from m={threshold}" +
                     (f" (scanned to {args.mcap})" if args.mcap else ""))
    return {"seq": args.seq, "mcap": args.mcap}, result, lines


def _cmd_ideal_dims(args):
    seq = from_text(args.seq)
    dims = bigraded_dims(seq, args.m)
    result = {
        "seq": list(seq.entries),
        "m": args.m,
        "quotient_dim": dims.quotient_dim,
        "relation_dim": dims.relation_dim,
        "total": dims.total,
        "weight_counts": {str(w): c for w, c in sorted(dims.weight_counts.items())},
    }
    lines = [
        f"degree-{args.m} monomials: {dims.total}",
        f"distinct weights (quotient dim): {dims.quotient_dim}",
        f"equal-weight relations: {dims.relation_dim}",
    ]
    return {"seq": args.seq, "m": args.m}, result, lines


def _cmd_ideal_gendeg(args):
    seq = from_text(args.seq)
    g = generation_degree(seq, args.mcap, args.t)
    per_degree = {
        str(m): equivalence_report(seq, m, 2).generated
        for m in range(3, args.mcap + 1)
    }
    result = {
        "seq": list(seq.entries),
        "m_cap": args.mcap,
        "generation_degree": g,
        "quadric_generated_by_degree": per_degree,
    }
    if g is None:
        lines = [f"not generated up to m_cap={args.mcap}"]
    else:
        lines = [f"generated in degrees <= {g} (scanned to {args.mcap})"]
    return {"seq": args.seq, "mcap": args.mcap, "t": args.t}, result, lines


def _cmd_game_trace(args):
    seq = from_text(args.seq)
    source = _parse_exponents(args.source)
    target = _parse_exponents(args.target)
    outcome = move_trace(source, target, seq)
    if isinstance(outcome, NonEquivalent):
        result = {
            "seq": list(seq.entries),
            "from": list(source),
            "to": list(target),
            "equivalent": False,
            "moves": None,
            "components": [outcome.source_component, outcome.target_component],
        }
        lines = [
            "not joinable by moves",
            f"component ids: {outcome.source_component} vs {outcome.target_component}",
        ]
    else:
        result = {
            "seq": list(seq.entries),
            "from": list(source),
            "to": list(target),
            "equivalent": True,
            "moves": [[list(src), list(dst)] for src, dst in outcome],
            "components": None,
        }
        lines = [f"joinable in {len(outcome)} move(s)"]
        lines.extend(f"  ({i},{j}) -> ({k},{l})" for (i, j), (k, l) in outcome)
    return {"seq": args.seq, "from": args.source, "to": args.target}, result, lines


def _cmd_jets_rank(args):
    system = _load_sections(args.sections_file)
    seq, _ = adapted_basis(system)
    dim = sym_power_dim(system, args.m)
    result = {"m": args.m, "adapted": list(seq.entries), "dim": dim}
    lines = [f"adapted orders: {seq.to_text()}", f"degree-{args.m} product rank: {dim}"]
    return {"sections_file": args.sections_file, "m": args.m}, result, lines


def _cmd_jets_maximal(args):
    system = _load_sections(args.sections_file)
    seq, _ = adapted_basis(system)
    dim = sym_power_dim(system, args.m)
    target = classify(seq, args.m).span
    result = {
        "m": args.m,
        "adapted": list(seq.entries),
        "dim": dim,
        "span": target,
        "maximal": dim == target,
    }
    lines = [
        f"adapted orders: {seq.to_text()}",
        f"dim {dim} vs span {target}: {'maximal' if dim == target else 'not maximal'}",
    ]
    return {"sections_file": args.sections_file, "m": args.m}, result, lines


def _cmd_jets_profile(args):
    system = _load_sections(args.sections_file)
    profile = filtration_profile(system, args.m)
    result = {
        "m": args.m,
        "kernel_dim": profile.kernel_dim,
        "per_weight": {str(w): d for w, d in sorted(profile.dims.items())},
    }
    lines = [f"degree-{args.m} relation space: dim {profile.kernel_dim}"]
    lines.extend(f"  weight {w}: {d}" for w, d in sorted(profile.dims.items()))
    return {"sections_file": args.sections_file, "m": args.m}, result, lines


def _cmd_jets_estimate(args):
    system = _load_sections(args.sections_file)
    deg, genus = degree_genus_estimate(system, args.mlo, args.mhi)
    result = {"m_lo": args.mlo, "m_hi": args.mhi, "degree": deg, "arithmetic_genus": genus}
    lines = [f"fitted degree {deg}, arithmetic genus {genus} on m in [{args.mlo}; {args.mhi}]"]
    return {"sections_file": args.sections_file, "mlo": args.mlo, "mhi": args.mhi}, result, lines


def _cmd_bounds_hypersurfaces(args):
    result = {
        "n": args.n,
        "m": args.m,
        "max_hypersurfaces": max_hypersurfaces(args.n, args.m),
        "next_hypersurface_bound": next_hypersurface_bound(args.n, args.m) if args.n >= 2 else None,
        "quadric_bound": quadric_bound(args.n - 1) if args.m == 2 and args.n >= 2 else None,
    }
    lines = [f"max independent degree-{args.m} hypersurfaces in P^{args.n}: {result['max_hypersurfaces']}"]
    if result["next_hypersurface_bound"] is not None:
        lines.append(f"next admissible count: {result['next_hypersurface_bound']}")
    return {"n": args.n, "m": args.m}, result, lines


def _cmd_bounds_pluecker(args):
    budget = pluecker_budget(args.n, args.d, args.g)
    weights = _parse_ints(args.weights) if args.weights else None
    result = {"n": args.n, "d": args.d, "g": args.g, "budget": budget}
    lines = [f"total inflection weight: {budget}"]
    if weights is not None:
        ok = check_weight_budget(args.n, args.d, args.g, weights)
        result["weights_sum"] = sum(weights)
        result["matches"] = ok
        lines.append(f"supplied weights sum to {sum(weights)}: {'matches' if ok else 'MISMATCH'}")
    return {"n": args.n, "d": args.d, "g": args.g, "weights": args.weights}, result, lines


def _cmd_verify(args):
    cfg = SweepConfig(
        max_entry=args.max_entry,
        random_trials=args.trials,
        seed=args.seed,
        m_cap=args.mcap,
        report_path=args.out,
        falsify_oracle=args.falsify_oracle,
    )
    if args.suite == "all":
        reports = run_all(cfg)
    else:
        reports = [run_suite(args.suite, cfg)]
    result = [r.to_dict() for r in reports]
    lines = []
    for r in reports:
        status = "pass" if r.passed else f"FAIL ({len(r.failures)} failures)"
        lines.append(f"{r.suite}: {status}, {r.checked} checked, {r.seconds:.2f}s")
    failed = any(not r.passed for r in reports)
    return {"suite": args.suite, "seed": args.seed}, result, lines, failed


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spanlab",
        description="Exact invariants of vanishing sequences and their monomial curves.")
    parser.add_argument("--version", action="version", version=f"spanlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit the JSON envelope")

    p = sub.add_parser("span", help="m-fold sumset size and classification")
    p.add_argument("--seq", required=True, help="comma-separated entries, e.g. 0,1,2,4")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--classify", action="store_true", help="show the difference-shape verdict")
    add_json(p)
    p.set_defaults(handler=_cmd_span)

    p = sub.add_parser("semigroup", help="gaps of a numerical semigroup")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 3,5")
    add_json(p)
    p.set_defaults(handler=_cmd_semigroup)

    p = sub.add_parser("curve", help="degree and genus of the monomial curve")
    p.add_argument("--seq", required=True)
    add_json(p)
    p.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("hilbert", help="eventual span line and stabilization threshold")
    p.add_argument("--seq", required=True)
    p.add_argument("--mcap", type=int, default=None)
    add_json(p)
    p.set_defaults(handler=_cmd_hilbert)

    p = sub.add_parser("ideal", help="weighted relation ideal data")
    ideal_sub = p.add_subparsers(dest="subcommand", required=True)
    q = ideal_sub.add_parser("dims", help="per-weight dimension tally at one degree")
    q.add_argument("--seq", required=True)
    q.add_argument("--m", type=int, required=True)
    add_json(q)
    q.set_defaults(handler=_cmd_ideal_dims)
    q = ideal_sub.add_parser("gendeg", help="smallest generating degree observed up to a cap")
    q.add_argument("--seq", required=True)
    q.add_argument("--mcap", type=int, default=8)
    q.add_argument("--t", type=int, default=2, help="starting neighbor order")
    add_json(q)
    q.set_defaults(handler=_cmd_ideal_gendeg)

    p = sub.add_parser("game", help="the piece-moving game")
    game_sub = p.add_subparsers(dest="subcommand", required=True)
    q = game_sub.add_parser("trace", help="shortest move sequence between two positions")
    q.add_argument("--seq", required=True)
    q.add_argument("--from", dest="source", required=True, help="exponent tuple, e.g. 2,0,1")
    q.add_argument("--to", dest="target", required=True)
    add_json(q)
    q.set_defaults(handler=_cmd_game_trace)

    p = sub.add_parser("jets", help="exact ranks of truncated-series systems")
    jets_sub = p.add_subparsers(dest="subcommand", required=True)
    for name, handler, extra in (
        ("rank", _cmd_jets_rank, ("m",)),
        ("maximal", _cmd_jets_maximal, ("m",)),
        ("profile", _cmd_jets_profile, ("m",)),
        ("estimate", _cmd_jets_estimate, ("mlo", "mhi")),
    ):
        q = jets_sub.add_parser(name)
        q.add_argument("--sections-file", required=True,
                       help="JSON array of coefficient arrays; entries like \"3/4\" or integers")
        for field in extra:
            q.add_argument(f"--{field}", type=int, required=True)
        add_json(q)
        q.set_defaults(handler=handler)

    p = sub.add_parser("bounds", help="closed-form counting bounds")
    bounds_sub = p.add_subparsers(dest="subcommand", required=True)
    q = bounds_sub.add_parser("hypersurfaces")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    add_json(q)
    q.set_defaults(handler=_cmd_bounds_hypersurfaces)
    q = bounds_sub.add_parser("pluecker")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--weights", default=None, help="comma-separated point weights")
    add_json(q)
    q.set_defaults(handler=_cmd_bounds_pluecker)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_IDS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-entry", type=int, default=None)
    p.add_argument("--mcap", type=int, default=None)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--falsify-oracle", action="store_true",
                   help="self-test: corrupt one expected value per suite")
    add_json(p)
    p.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        outcome = args.handler(args)
    except (SpanlabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failed = False
    if len(outcome) == 4:
        inputs, result, lines, failed = outcome
    else:
        inputs, result, lines = outcome
    if args.json:
        envelope = {
            "command": args.command if not getattr(args, "subcommand", None)
            else f"{args.command} {args.subcommand}",
            "inputs": inputs,
            "result": result,
            "version": __version__,
            "seconds": round(time.perf_counter() - start, 4),
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 3 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
