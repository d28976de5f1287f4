import random
from math import comb

import pytest

from spanlab import (
    LengthMismatch,
    NonEquivalent,
    PreconditionViolated,
    ap_move_strategy,
    ap_sequence,
    apply_move,
    bigraded_dims,
    degree,
    equivalence_report,
    exchange_degree,
    generation_degree,
    interlaced,
    monomials_of_degree,
    move_trace,
    near_ap_high,
    near_ap_low,
    normalized_sequences,
    reverse,
    span,
    support,
    t_neighbors,
    validate,
    weight,
    weight_class,
)


class TestBasics:
    def test_weight(self):
        seq = validate([0, 1, 3])
        assert weight((2, 0, 0), seq) == 0
        assert weight((0, 3, 0), seq) == 3
        assert weight((0, 0, 2), seq) == 6

    def test_weight_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            weight((1, 0), validate([0, 1, 3]))

    def test_support(self):
        assert support((2, 0, 1)) == {0, 2}
        assert support((0, 3, 0)) == {1}
        assert support((0, 0, 0)) == set()

    def test_interlaced(self):
        assert interlaced({0, 2}, {1})
        assert not interlaced({0, 1}, {2, 3})
        assert interlaced({1}, {0, 2})
        assert not interlaced(set(), {1})

    @pytest.mark.parametrize("m,nvars", [(0, 3), (2, 3), (3, 4), (5, 2)])
    def test_monomial_enumeration(self, m, nvars):
        monos = list(monomials_of_degree(m, nvars))
        assert len(monos) == comb(m + nvars - 1, nvars - 1)
        assert monos == sorted(monos)
        assert all(sum(xi) == m for xi in monos)


class TestBigradedDims:
    def test_frozen_examples(self):
        d = bigraded_dims(validate([0, 1, 3]), 2)
        assert (d.quotient_dim, d.relation_dim) == (6, 0)
        d = bigraded_dims(validate([0, 1, 2]), 2)
        assert (d.quotient_dim, d.relation_dim) == (5, 1)

    @pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 4), (4, 3)])
    def test_progression_quotient(self, n, m):
        d = bigraded_dims(validate(list(range(n + 1))), m)
        assert d.quotient_dim == m * n + 1

    def test_matches_span_on_family(self):
        for seq in normalized_sequences(1, 3, 6):
            for m in range(1, 5):
                d = bigraded_dims(seq, m)
                assert d.quotient_dim == span(seq, m)
                assert d.quotient_dim + d.relation_dim == comb(m + seq.n, seq.n)


class TestNeighbors:
    def test_frozen_examples(self):
        assert t_neighbors((1, 0, 1), validate([0, 1, 2]), 2) == [(0, 2, 0)]
        assert t_neighbors((2, 0, 1), validate([0, 1, 3]), 2) == []

    def test_progression_moves(self):
        seq = validate([0, 2, 4, 6])
        neighbors = t_neighbors((1, 0, 0, 1), seq, 2)
        assert (0, 1, 1, 0) in neighbors

    def test_exchange_degree(self):
        assert exchange_degree((1, 0, 1), (0, 2, 0)) == 2
        assert exchange_degree((2, 0, 1), (0, 3, 0)) == 3
        assert exchange_degree((1, 1, 1), (1, 1, 1)) == 0


class TestEquivalence:
    def test_frozen_examples(self):
        assert equivalence_report(validate([0, 1, 2, 4]), 3, 2).generated
        rep = equivalence_report(validate([0, 1, 3]), 3, 2)
        assert not rep.generated
        assert set(rep.witness) == {(2, 0, 1), (0, 3, 0)}
        assert equivalence_report(validate([0, 1, 2]), 4, 2).generated

    def test_witness_only_when_split(self):
        rep = equivalence_report(validate([0, 1, 2, 4]), 3, 2)
        assert rep.witness is None
        assert rep.components == rep.weight_classes

    def test_higher_order_joins_witness(self):
        rep = equivalence_report(validate([0, 1, 3]), 3, 3)
        assert rep.generated

    def test_mirror_symmetry(self):
        for entries in [(0, 1, 3), (0, 1, 2, 5), (0, 2, 3, 7)]:
            seq = validate(entries)
            for m in (3, 4):
                a = equivalence_report(seq, m, 2)
                b = equivalence_report(reverse(seq), m, 2)
                assert a.components == b.components
                assert a.weight_classes == b.weight_classes

    def test_interlaced_supports_exhaustive(self):
        # Distinct equal-degree equal-weight monomials always interlace.
        for seq in normalized_sequences(1, 3, 5):
            for m in (2, 3):
                monos = list(monomials_of_degree(m, len(seq)))
                by_weight = {}
                for xi in monos:
                    by_weight.setdefault(weight(xi, seq), []).append(xi)
                for members in by_weight.values():
                    for i in range(len(members)):
                        for j in range(i + 1, len(members)):
                            assert interlaced(support(members[i]), support(members[j]))


class TestGenerationDegree:
    def test_frozen_examples(self):
        assert generation_degree(validate([0, 1, 2, 3]), 8) == 2
        assert generation_degree(validate([0, 1, 3]), 8) == 3
        assert generation_degree(validate([0, 2, 3, 4]), 8) == 2

    def test_two_variable_ideal_is_trivial(self):
        assert generation_degree(validate([0, 5]), 6) == 2

    def test_rejects_bad_cap(self):
        with pytest.raises(ValueError):
            generation_degree(validate([0, 1, 3]), 1)


class TestMoveTrace:
    def test_single_move(self):
        trace = move_trace((1, 0, 1), (0, 2, 0), validate([0, 1, 2]))
        assert trace == [((0, 2), (1, 1))]

    def test_identity(self):
        assert move_trace((1, 0, 1), (1, 0, 1), validate([0, 1, 2])) == []

    def test_split_pair(self):
        outcome = move_trace((2, 0, 1), (0, 3, 0), validate([0, 1, 3]))
        assert isinstance(outcome, NonEquivalent)
        assert outcome.source_component != outcome.target_component

    def test_precondition(self):
        with pytest.raises(PreconditionViolated):
            move_trace((2, 0, 0), (0, 3, 0), validate([0, 1, 3]))

    def test_rejects_negative_exponents(self):
        with pytest.raises(PreconditionViolated):
            move_trace((-1, 1, 1), (1, 1, -1), validate([0, 1, 2]))

    def test_replay_reaches_target(self):
        seq = ap_sequence(3, 1)
        rng = random.Random(5)
        monos = weight_class(seq, 4, 6)
        assert len(monos) > 2
        for _ in range(10):
            xi, eta = rng.sample(monos, 2)
            trace = move_trace(xi, eta, seq)
            assert not isinstance(trace, NonEquivalent)
            pos = xi
            for mv in trace:
                pos = apply_move(pos, mv)
                assert degree(pos) == degree(xi)
                assert weight(pos, seq) == weight(xi, seq)
            assert pos == eta

    def test_multiplication_preserves_connectivity(self):
        # If xi and eta are joinable then so are lambda*xi and lambda*eta.
        seq = near_ap_low(3, 1)
        rng = random.Random(11)
        for _ in range(10):
            xi = rng.choice(list(monomials_of_degree(2, 4)))
            nbrs = t_neighbors(xi, seq, 2)
            if not nbrs:
                continue
            eta = rng.choice(nbrs)
            lam = tuple(rng.randint(0, 2) for _ in range(4))
            lifted = move_trace(tuple(a + b for a, b in zip(xi, lam)),
                                tuple(a + b for a, b in zip(eta, lam)), seq)
            assert not isinstance(lifted, NonEquivalent)


class TestApStrategy:
    def test_agrees_with_search_on_progressions(self):
        for n, d in [(2, 1), (3, 1), (3, 2), (4, 1)]:
            seq = ap_sequence(n, d)
            for m in (3, 4):
                monos = list(monomials_of_degree(m, len(seq)))
                by_weight = {}
                for xi in monos:
                    by_weight.setdefault(weight(xi, seq), []).append(xi)
                for members in by_weight.values():
                    for i in range(len(members)):
                        for j in range(i + 1, len(members)):
                            verdict = ap_move_strategy(members[i], members[j], seq)
                            assert verdict is True
                            bfs = move_trace(members[i], members[j], seq)
                            assert not isinstance(bfs, NonEquivalent)

    def test_inconclusive_outside_progressions(self):
        assert ap_move_strategy((2, 0, 1), (0, 3, 0), validate([0, 1, 3])) is None
