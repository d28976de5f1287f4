"""Deterministic verification sweeps.

Each suite re-checks one cluster of the library's claims over an exhaustive or
seeded-random family and returns a machine-readable report.  Reports are
byte-identical across runs with the same configuration (timings aside).  The
``falsify_oracle`` flag deliberately corrupts one expected value per suite so
the harness itself can be shown to catch failures.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Callable, Iterator, Optional

from . import bounds as bounds_mod
from .errors import HypothesisFailed, PropagationFailed, UnknownSuite
from .jets import (
    filtration_profile,
    check_ideal_propagation,
    is_m_maximal,
    monomial_system,
    perturbed_system,
    reparametrized_system,
    sym_power_dim,
)
from .monomial_ideal import (
    NonEquivalent,
    bigraded_dims,
    equivalence_report,
    generation_degree,
    move_trace,
    monomials_of_degree,
    t_neighbors,
)
from .semigroup import curve_invariants, hilbert_polynomial
from .sequences import VanishingSequence, inflection_weight, reverse, scale, translate
from .span import Verdict, classify, span, span_sequence


@dataclass(frozen=True)
class SweepConfig:
    """Family bounds and seeds for a sweep; unset fields use suite defaults."""

    n_range: Optional[tuple[int, int]] = None
    max_entry: Optional[int] = None
    m_range: Optional[tuple[int, int]] = None
    random_trials: Optional[int] = None
    seed: int = 0
    m_cap: Optional[int] = None
    report_path: Optional[str] = None
    falsify_oracle: bool = False


@dataclass
class SuiteReport:
    """Outcome of one suite: instance count, failure dumps, wall time."""

    suite: str
    checked: int
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def normalized_sequences(n_lo: int, n_hi: int, max_entry: int) -> Iterator[VanishingSequence]:
    """All sequences (0, b_1, ..., b_n) with b_n <= max_entry and gcd 1,
    in lexicographic order.

    Restricting sweeps to this family is the translate/scale deduplication:
    every sequence is a translate of a scaled normalized one and all span
    data is invariant under both (which the invariance suite checks on its
    own random family).
    """
    for n in range(n_lo, n_hi + 1):
        for tail in combinations(range(1, max_entry + 1), n):
            g = 0
            for b in tail:
                g = gcd(g, b)
            if g == 1:
                yield VanishingSequence((0,) + tail)


def ap_sequence(n: int, d: int) -> VanishingSequence:
    return VanishingSequence(tuple(d * i for i in range(n + 1)))


def near_ap_high(n: int, d: int) -> VanishingSequence:
    """Differences (d, ..., d, 2d): the top entry jumps."""
    return VanishingSequence(tuple(d * i for i in range(n)) + (d * (n + 1),))


def near_ap_low(n: int, d: int) -> VanishingSequence:
    """Differences (2d, d, ..., d): the gap sits at the bottom."""
    return VanishingSequence((0,) + tuple(d * i for i in range(2, n + 2)))


def _fail(failures: list[dict], inputs: dict, expected, got):
    failures.append({"input": inputs, "expected": repr(expected), "got": repr(got)})


def _check(failures, inputs, expected, got):
    if expected != got:
        _fail(failures, inputs, expected, got)


def _check_true(failures, inputs, condition):
    if not condition:
        _fail(failures, inputs, True, False)


def _derived_seed(base: int, seq: VanishingSequence, index: int) -> int:
    h = base
    for e in seq:
        h = h * 131 + e + 7
    return h * 1009 + index


def _suite_extremal_spans(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # Exhaustive check of the extremal-span classification: minimal span
    # exactly for arithmetic progressions, then a gap, then the near-AP value.
    n_lo, n_hi = cfg.n_range or (1, 6)
    max_entry = cfg.max_entry or 12
    m_lo, m_hi = cfg.m_range or (2, 5)
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for seq in normalized_sequences(n_lo, n_hi, max_entry):
        n = seq.n
        verdict = classify(seq, m_lo).verdict
        spans = span_sequence(seq, m_hi)
        for m in range(m_lo, m_hi + 1):
            s = spans[m - 1]
            inputs = {"seq": list(seq.entries), "m": m}
            _check_true(failures, {**inputs, "check": "lower_bound"}, s >= m * n + 1 + bias)
            _check(failures, {**inputs, "check": "minimal_iff_ap"},
                   verdict == Verdict.ARITHMETIC_PROGRESSION, s == m * n + 1)
            _check_true(failures, {**inputs, "check": "gap"},
                        not (m * n + 1 < s < m * (n + 1)))
            if n >= 3:
                near = verdict in (Verdict.NEAR_AP_HIGH, Verdict.NEAR_AP_LOW)
                _check(failures, {**inputs, "check": "next_iff_near_ap"},
                       near, s == m * (n + 1))
            _check_true(failures, {**inputs, "check": "upper_bound"},
                        s <= min(comb(m + n, n), m * (seq[-1] - seq[0]) + 1))
            checked += 1
    return checked, failures


def _suite_span_invariance(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # Span is invariant under translation, scaling and reversal.
    trials = cfg.random_trials or 10_000
    rng = random.Random(cfg.seed)
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for trial in range(trials):
        n = rng.randint(1, 5)
        entries = tuple(sorted(rng.sample(range(0, 30), n + 1)))
        seq = VanishingSequence(entries)
        m = rng.randint(1, 4)
        c = rng.randint(-seq[0], 6)
        d = rng.randint(1, 4)
        base = span(seq, m)
        inputs = {"seq": list(entries), "m": m, "c": c, "d": d, "trial": trial}
        _check(failures, {**inputs, "check": "translate"}, base + bias, span(translate(seq, c), m))
        _check(failures, {**inputs, "check": "scale"}, base, span(scale(seq, d), m))
        _check(failures, {**inputs, "check": "reverse"}, base, span(reverse(seq), m))
        _check_true(failures, {**inputs, "check": "lower_bound"}, base >= m * n + 1)
        checked += 1
    return checked, failures


def _suite_dimension_agreement(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # Three independent computations of the same dimension must agree:
    # sumset span, weight tally of degree-m monomials, and the exact rank of
    # degree-m products of monomial jets.
    n_lo, n_hi = cfg.n_range or (1, 4)
    max_entry = cfg.max_entry or 8
    m_lo, m_hi = cfg.m_range or (1, 5)
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for seq in normalized_sequences(n_lo, n_hi, max_entry):
        system = monomial_system(seq)
        spans = span_sequence(seq, m_hi)
        for m in range(m_lo, m_hi + 1):
            dims = bigraded_dims(seq, m)
            rank_dim = sym_power_dim(system, m)
            inputs = {"seq": list(seq.entries), "m": m}
            _check(failures, {**inputs, "check": "sumset_vs_tally"},
                   spans[m - 1] + bias, dims.quotient_dim)
            _check(failures, {**inputs, "check": "tally_vs_rank"},
                   dims.quotient_dim, rank_dim)
            _check(failures, {**inputs, "check": "count_identity"},
                   comb(m + seq.n, seq.n), dims.quotient_dim + dims.relation_dim)
            _check_true(failures, {**inputs, "check": "upper_bound"},
                        dims.quotient_dim <= comb(m + seq.n, seq.n))
            checked += 1
    return checked, failures


def _suite_hilbert_stabilization(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # The span eventually follows the line degree*m + 1 - genus, and the
    # threshold is always observed within the scanned range.
    n_lo, n_hi = cfg.n_range or (1, 5)
    max_entry = cfg.max_entry or 10
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for seq in normalized_sequences(n_lo, n_hi, max_entry):
        lead, const = hilbert_polynomial(seq)
        const += bias
        m_cap = cfg.m_cap or 4 * lead
        spans = span_sequence(seq, m_cap)
        threshold = None
        for m in range(m_cap, 0, -1):
            if spans[m - 1] == lead * m + const:
                threshold = m
            else:
                break
        inputs = {"seq": list(seq.entries), "m_cap": m_cap}
        _check_true(failures, {**inputs, "check": "threshold_exists"}, threshold is not None)
        if threshold is not None:
            for m in range(threshold, m_cap + 1):
                _check(failures, {**inputs, "check": "line_value", "m": m},
                       lead * m + const, spans[m - 1])
        genus = curve_invariants(seq).arithmetic_genus
        _check_true(failures, {**inputs, "check": "genus_nonnegative"}, genus >= 0)
        checked += 1
    return checked, failures


def _suite_quadric_generation(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # For progressions and near-progressions every equal-weight class stays
    # connected under two-piece moves, in every degree up to the cap; and
    # connectivity survives multiplication by an arbitrary monomial.
    m_lo, m_hi = cfg.m_range or (3, 6)
    bias = 1 if cfg.falsify_oracle else 0
    rng = random.Random(cfg.seed)
    checked = 0
    failures: list[dict] = []
    family: list[VanishingSequence] = []
    family.extend(ap_sequence(n, d) for n in range(2, 6) for d in (1, 2, 3))
    family.extend(near_ap_high(n, d) for n in range(3, 6) for d in (1, 2))
    family.extend(near_ap_low(n, d) for n in range(3, 6) for d in (1, 2))
    for seq in family:
        for m in range(m_lo, m_hi + 1):
            rep = equivalence_report(seq, m, 2)
            inputs = {"seq": list(seq.entries), "m": m}
            _check(failures, {**inputs, "check": "connected"},
                   rep.weight_classes + bias, rep.components)
            _check_true(failures, {**inputs, "check": "component_count"},
                        rep.components >= rep.weight_classes)
            checked += 1
    # multiplication stability of connectivity, on traced neighbor pairs
    for seq in (ap_sequence(3, 1), near_ap_high(3, 1), near_ap_low(4, 1)):
        pairs = []
        for xi in monomials_of_degree(2, len(seq)):
            for eta in t_neighbors(xi, seq, 2):
                pairs.append((xi, eta))
        rng.shuffle(pairs)
        for xi, eta in pairs[:5]:
            lam = tuple(rng.randint(0, 2) for _ in range(len(seq)))
            lifted_xi = tuple(a + b for a, b in zip(xi, lam))
            lifted_eta = tuple(a + b for a, b in zip(eta, lam))
            trace = move_trace(lifted_xi, lifted_eta, seq)
            inputs = {"seq": list(seq.entries), "xi": list(lifted_xi), "eta": list(lifted_eta)}
            _check_true(failures, {**inputs, "check": "multiplied_pair_connected"},
                        not isinstance(trace, NonEquivalent))
            checked += 1
    return checked, failures


def _suite_cuspidal_cubic(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # The one sequence whose relation ideal is famously not generated by
    # quadrics: no degree-2 relations at all, a degree-3 relation class that
    # splits, and generation observed only from degree 3 on.
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    seq = VanishingSequence((0, 1, 3))
    inputs = {"seq": [0, 1, 3]}
    _check(failures, {**inputs, "check": "no_quadric_relations"},
           0 + bias, bigraded_dims(seq, 2).relation_dim)
    _check_true(failures, {**inputs, "check": "cubic_relation_exists"},
                bigraded_dims(seq, 3).relation_dim >= 1)
    rep = equivalence_report(seq, 3, 2)
    _check(failures, {**inputs, "check": "not_quadric_generated"}, False, rep.generated)
    witness = set(rep.witness) if rep.witness else set()
    _check(failures, {**inputs, "check": "witness_pair"},
           {(2, 0, 1), (0, 3, 0)}, witness)
    trace = move_trace((2, 0, 1), (0, 3, 0), seq)
    _check_true(failures, {**inputs, "check": "witness_not_joinable"},
                isinstance(trace, NonEquivalent))
    _check(failures, {**inputs, "check": "generation_degree"},
           3, generation_degree(seq, m_cap=8))
    mirrored = reverse(seq)
    rep_rev = equivalence_report(mirrored, 3, 2)
    _check(failures, {"seq": list(mirrored.entries), "check": "mirror_split"},
           False, rep_rev.generated)
    _check(failures, {"seq": list(mirrored.entries), "check": "mirror_components"},
           rep.components, rep_rev.components)
    checked += 8
    return checked, failures


def _suite_perturbation_bounds(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # Random tail perturbations can only lose relations: the product span is
    # at least the sumset span, and each weight level of the relation space
    # stays within the monomial model's count.  Some perturbation must be
    # strict, otherwise the bound would be an equality and say nothing.
    n_lo, n_hi = cfg.n_range or (1, 3)
    max_entry = cfg.max_entry or 6
    trials = cfg.random_trials or 200
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    strict = 0
    for seq in normalized_sequences(n_lo, n_hi, max_entry):
        spans = span_sequence(seq, 3)
        model_counts = {m: bigraded_dims(seq, m).weight_counts for m in (2, 3)}
        for k in range(trials):
            system = perturbed_system(seq, tail=3, seed=_derived_seed(cfg.seed, seq, k))
            for m in (2, 3):
                profile = filtration_profile(system, m)
                total = comb(m + seq.n, seq.n)
                dim = total - profile.kernel_dim
                inputs = {"seq": list(seq.entries), "m": m, "trial": k}
                _check_true(failures, {**inputs, "check": "span_lower_bound"},
                            dim >= spans[m - 1] + bias)
                if dim > spans[m - 1]:
                    strict += 1
                for w, d in profile.dims.items():
                    cap = max(0, model_counts[m].get(w, 0) - 1)
                    _check_true(failures,
                                {**inputs, "check": "weight_level_bound", "weight": w},
                                d <= cap)
                _check(failures, {**inputs, "check": "rank_nullity"},
                       sum(profile.dims.values()), profile.kernel_dim)
                checked += 1
    _check_true(failures, {"check": "some_perturbation_strict"}, strict >= 1)
    checked += 1
    return checked, failures


def _suite_maximality_transfer(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # A system that attains the minimal degree-2 dimension keeps attaining it
    # in every higher degree (when degree-2 moves connect everything), and
    # its relations grow one degree at a time.
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    bases = []
    for n in range(3, 6):
        bases.extend([ap_sequence(n, 1), near_ap_high(n, 1), near_ap_low(n, 1)])
    for idx, seq in enumerate(bases):
        systems = {
            "monomial": monomial_system(seq),
            "reparametrized": reparametrized_system(seq, tail=1, seed=_derived_seed(cfg.seed, seq, idx)),
        }
        for label, system in systems.items():
            inputs = {"seq": list(seq.entries), "system": label}
            _check_true(failures, {**inputs, "check": "two_maximal"},
                        is_m_maximal(system, 2))
            try:
                report = check_ideal_propagation(system, 2, t_max=5)
            except (HypothesisFailed, PropagationFailed) as exc:
                _fail(failures, {**inputs, "check": "propagation"}, "report", repr(exc))
                checked += 1
                continue
            for t in range(2, 6):
                _check(failures, {**inputs, "check": "t_maximal", "t": t},
                       span(seq, t) + bias, report.quotient_dims[t])
                _check_true(failures, {**inputs, "check": "kernel_bound", "t": t},
                            report.kernel_dims[t] <= comb(t + seq.n, seq.n) - (t * seq.n + 1))
                checked += 1
            for t in range(2, 5):
                _check(failures, {**inputs, "check": "one_step", "t": t},
                       True, report.one_step_generates[t])
                checked += 1
    return checked, failures


def _suite_bound_instantiation(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # Monomial jets meet the closed-form hypersurface counts exactly:
    # progressions the maximal count, the jump sequence the next one.
    m_lo, m_hi = cfg.m_range or (2, 4)
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for n in range(2, 6):
        system = monomial_system(ap_sequence(n, 1))
        for m in range(m_lo, m_hi + 1):
            total = comb(m + n, n)
            got = total - sym_power_dim(system, m)
            inputs = {"n": n, "m": m, "family": "progression"}
            _check(failures, {**inputs, "check": "max_count"},
                   bounds_mod.max_hypersurfaces(n, m) + bias, got)
            checked += 1
    for n in range(3, 6):
        system = monomial_system(near_ap_high(n, 1))
        for m in range(m_lo, m_hi + 1):
            total = comb(m + n, n)
            got = total - sym_power_dim(system, m)
            inputs = {"n": n, "m": m, "family": "jump"}
            _check(failures, {**inputs, "check": "next_count"},
                   bounds_mod.next_hypersurface_bound(n, m), got)
            _check_true(failures, {**inputs, "check": "strictly_below_max"},
                        got < bounds_mod.max_hypersurfaces(n, m))
            checked += 1
    return checked, failures


def _suite_elliptic_inflections(cfg: SweepConfig) -> tuple[int, list[dict]]:
    # The inflection budget of a degree-(n+1) genus-1 system is (n+1)^2, and
    # the jump sequence accounts for it one unit per point.
    bias = 1 if cfg.falsify_oracle else 0
    checked = 0
    failures: list[dict] = []
    for n in range(2, 11):
        seq = near_ap_high(n, 1)
        budget = bounds_mod.pluecker_budget(n, n + 1, 1)
        inputs = {"n": n}
        _check(failures, {**inputs, "check": "budget"}, (n + 1) ** 2 + bias, budget)
        _check(failures, {**inputs, "check": "unit_weight"}, 1, inflection_weight(seq))
        _check(failures, {**inputs, "check": "pair_span"}, 2 * n + 2, span(seq, 2))
        _check_true(failures, {**inputs, "check": "budget_split"},
                    bounds_mod.check_weight_budget(n, n + 1, 1, [1] * (n + 1) ** 2))
        _check_true(failures, {**inputs, "check": "budget_positive"}, budget > 0)
        checked += 1
    return checked, failures


_SUITES: dict[str, Callable[[SweepConfig], tuple[int, list[dict]]]] = {
    "prop33": _suite_extremal_spans,
    "cor43": _suite_span_invariance,
    "prop41": _suite_dimension_agreement,
    "prop49_410": _suite_hilbert_stabilization,
    "prop51": _suite_quadric_generation,
    "rem53": _suite_cuspidal_cubic,
    "prop44_45": _suite_perturbation_bounds,
    "prop46_47": _suite_maximality_transfer,
    "thm14_15": _suite_bound_instantiation,
    "prop37": _suite_elliptic_inflections,
}

SUITE_IDS = tuple(_SUITES)


def run_suite(suite_id: str, cfg: Optional[SweepConfig] = None) -> SuiteReport:
    """Run one suite and return its report (optionally written to cfg.report_path)."""
    cfg = cfg or SweepConfig()
    runner = _SUITES.get(suite_id)
    if runner is None:
        raise UnknownSuite(f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}")
    start = time.perf_counter()
    checked, failures = runner(cfg)
    report = SuiteReport(suite=suite_id, checked=checked, failures=failures,
                         seconds=time.perf_counter() - start)
    if cfg.report_path:
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report


def run_all(cfg: Optional[SweepConfig] = None) -> list[SuiteReport]:
    """Run every suite; SPANLAB_THREADS > 1 runs suites concurrently."""
    cfg = cfg or SweepConfig()
    inner = SweepConfig(**{**cfg.__dict__, "report_path": None})
    threads = max(1, int(os.environ.get("SPANLAB_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda sid: run_suite(sid, inner), SUITE_IDS))
    else:
        reports = [run_suite(sid, inner) for sid in SUITE_IDS]
    if cfg.report_path:
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2, sort_keys=True)
            fh.write("\n")
    return reports
