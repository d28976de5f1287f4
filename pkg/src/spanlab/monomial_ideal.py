"""Equal-weight monomial combinatorics and the piece-moving game.

Monomials in X_0..X_n are exponent tuples; a sequence assigns each variable a
weight.  Differences of equal-degree, equal-weight monomials span the relation
space of the associated monomial curve, and whether low-degree relations
generate everything is decided by a game: a move exchanges a small bunch of
"pieces" (a sub-monomial) for an equal-weight bunch, and two monomials are
connected exactly when their difference lies in the ideal generated by the
relations of the move's degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Union

from .errors import LengthMismatch, PreconditionViolated
from .sequences import VanishingSequence

Monomial = tuple[int, ...]
Move = tuple[tuple[int, int], tuple[int, int]]


def monomials_of_degree(m: int, nvars: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree m, in ascending lexicographic order."""
    if nvars == 1:
        yield (m,)
        return
    for k in range(m + 1):
        for rest in monomials_of_degree(m - k, nvars - 1):
            yield (k,) + rest


def degree(xi: Monomial) -> int:
    return sum(xi)


def weight(xi: Monomial, seq: VanishingSequence) -> int:
    """Weighted degree of the monomial: sum of a_i * exponent_i."""
    if len(xi) != len(seq):
        raise LengthMismatch(f"exponent tuple of length {len(xi)} against sequence of length {len(seq)}")
    return sum(a * k for a, k in zip(seq, xi))


def support(xi: Monomial) -> set[int]:
    """Indices of the variables actually present."""
    return {i for i, k in enumerate(xi) if k}


def interlaced(u, v) -> bool:
    """True when one set has an element strictly between two elements of the other."""
    u, v = set(u), set(v)
    if not u or not v:
        return False
    return any(min(u) < q < max(u) for q in v) or any(min(v) < p < max(v) for p in u)


def exchange_degree(xi: Monomial, eta: Monomial) -> int:
    """Number of pieces that must move to turn xi into eta.

    Equals the degree of the sub-monomials exchanged: the positive part of
    the exponent difference.  Zero iff the monomials are equal (for equal
    total degree).
    """
    return sum(d - e for d, e in zip(xi, eta) if d > e)


@dataclass(frozen=True)
class BigradedDims:
    """Degree-m dimension data of the weighted grading.

    ``weight_counts[j]`` is the number of degree-m monomials of weight j;
    ``quotient_dim`` counts the distinct weights (the span of the sequence at
    m) and ``relation_dim`` the independent equal-weight differences.
    """

    m: int
    weight_counts: dict[int, int]

    @property
    def quotient_dim(self) -> int:
        return len(self.weight_counts)

    @property
    def relation_dim(self) -> int:
        return sum(c - 1 for c in self.weight_counts.values())

    @property
    def total(self) -> int:
        return sum(self.weight_counts.values())


def bigraded_dims(seq: VanishingSequence, m: int) -> BigradedDims:
    """Tally the weights of all degree-m monomials in n+1 variables."""
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
    counts: dict[int, int] = {}
    for xi in monomials_of_degree(m, len(seq)):
        w = weight(xi, seq)
        counts[w] = counts.get(w, 0) + 1
    assert sum(counts.values()) == comb(m + seq.n, seq.n)
    return BigradedDims(m, counts)


def weight_class(seq: VanishingSequence, m: int, w: int) -> list[Monomial]:
    """Degree-m monomials of weight w, in lexicographic order."""
    return [xi for xi in monomials_of_degree(m, len(seq)) if weight(xi, seq) == w]


def t_neighbors(xi: Monomial, seq: VanishingSequence, t: int) -> list[Monomial]:
    """Monomials reachable from xi by one exchange of degree at most t.

    Results have the same total degree and weight; the exchanged piece has
    degree between 2 and t (single-variable exchanges cannot preserve both
    degree and weight).
    """
    if t < 2:
        raise ValueError(f"neighbor order must be >= 2, got {t}")
    m = degree(xi)
    w = weight(xi, seq)
    return [eta for eta in weight_class(seq, m, w)
            if eta != xi and exchange_degree(xi, eta) <= t]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of partitioning degree-m monomials by t-step connectivity.

    ``generated`` means every equal-weight pair is connected, i.e. the full
    degree-m relation space is a multiple of the degree-<=t one.  When it is
    not, ``witness`` holds an equal-weight pair from two different components.
    """

    m: int
    t: int
    weight_classes: int
    components: int
    generated: bool
    witness: Optional[tuple[Monomial, Monomial]] = None


def _partition(seq: VanishingSequence, m: int, t: int):
    # Weight classes in ascending weight; inside each class, components of
    # the t-step graph via union-find over lexicographically sorted members.
    classes: dict[int, list[Monomial]] = {}
    for xi in monomials_of_degree(m, len(seq)):
        classes.setdefault(weight(xi, seq), []).append(xi)
    partition = []
    for w in sorted(classes):
        members = classes[w]
        uf = _UnionFind(len(members))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if exchange_degree(members[i], members[j]) <= t:
                    uf.union(i, j)
        groups: dict[int, list[Monomial]] = {}
        for i, xi in enumerate(members):
            groups.setdefault(uf.find(i), []).append(xi)
        components = sorted(groups.values(), key=lambda g: g[0])
        partition.append((w, components))
    return partition


def equivalence_report(seq: VanishingSequence, m: int, t: int) -> EquivalenceReport:
    """Partition degree-m monomials into weight classes and t-step components."""
    if not (m >= t >= 2):
        raise ValueError(f"need m >= t >= 2, got m={m}, t={t}")
    partition = _partition(seq, m, t)
    n_classes = len(partition)
    n_components = sum(len(comps) for _, comps in partition)
    witness = None
    for _, comps in partition:
        if len(comps) > 1:
            witness = (comps[0][0], comps[1][0])
            break
    return EquivalenceReport(
        m=m,
        t=t,
        weight_classes=n_classes,
        components=n_components,
        generated=n_components == n_classes,
        witness=witness,
    )


def generation_degree(seq: VanishingSequence, m_cap: int, t_start: int = 2) -> Optional[int]:
    """Smallest g with every degree in (g; m_cap] generated by degree-g steps.

    Returns None when even g = m_cap fails, i.e. generation was not observed
    up to the cap; degrees beyond m_cap are never extrapolated.
    """
    if not (m_cap >= t_start >= 2):
        raise ValueError(f"need m_cap >= t_start >= 2, got m_cap={m_cap}, t_start={t_start}")
    for g in range(t_start, m_cap + 1):
        if all(equivalence_report(seq, m, g).generated for m in range(g + 1, m_cap + 1)):
            return g
    return None


@dataclass(frozen=True)
class NonEquivalent:
    """Verdict that no move sequence joins the two monomials, with the
    component ids of each in the full partition of their degree."""

    source_component: int
    target_component: int


def _pair_targets(seq: VanishingSequence) -> dict[int, list[tuple[int, int]]]:
    table: dict[int, list[tuple[int, int]]] = {}
    for i in range(len(seq)):
        for j in range(i, len(seq)):
            table.setdefault(seq[i] + seq[j], []).append((i, j))
    return table


def apply_move(xi: Monomial, move: Move) -> Monomial:
    """Apply one two-piece move (i, j) -> (k, l) to the position."""
    (i, j), (k, l) = move
    out = list(xi)
    out[i] -= 1
    out[j] -= 1
    if min(out[i], out[j]) < 0:
        raise PreconditionViolated(f"no pieces to move from squares {(i, j)} in {xi}")
    out[k] += 1
    out[l] += 1
    return tuple(out)


def _moves_from(xi: Monomial, seq: VanishingSequence, table) -> Iterator[tuple[Monomial, Move]]:
    occupied = [i for i, k in enumerate(xi) if k]
    for a, i in enumerate(occupied):
        for j in occupied[a:]:
            if i == j and xi[i] < 2:
                continue
            for k, l in table[seq[i] + seq[j]]:
                if (k, l) == (i, j):
                    continue
                yield apply_move(xi, ((i, j), (k, l))), ((i, j), (k, l))


def _component_ids(seq: VanishingSequence, m: int) -> dict[Monomial, int]:
    ids: dict[Monomial, int] = {}
    next_id = 0
    for _, comps in _partition(seq, m, 2):
        for comp in comps:
            for xi in comp:
                ids[xi] = next_id
            next_id += 1
    return ids


def move_trace(xi: Monomial, eta: Monomial, seq: VanishingSequence) -> Union[list[Move], NonEquivalent]:
    """Shortest move sequence turning xi into eta, found by breadth-first search.

    Both monomials must have equal degree and equal weight.  When they sit in
    different components, returns the component ids instead of a trace.
    """
    if len(xi) != len(seq) or len(eta) != len(seq):
        raise LengthMismatch("exponent tuples must match the sequence length")
    if min(xi) < 0 or min(eta) < 0:
        raise PreconditionViolated("exponents must be non-negative")
    if degree(xi) != degree(eta) or weight(xi, seq) != weight(eta, seq):
        raise PreconditionViolated(
            f"{xi} and {eta} differ in degree or weight; no move sequence can join them")
    if xi == eta:
        return []
    table = _pair_targets(seq)
    parent: dict[Monomial, tuple[Monomial, Move]] = {xi: (xi, ((0, 0), (0, 0)))}
    frontier = [xi]
    while frontier:
        nxt = []
        for pos in frontier:
            for new, move in _moves_from(pos, seq, table):
                if new in parent:
                    continue
                parent[new] = (pos, move)
                if new == eta:
                    trace = []
                    cur = eta
                    while cur != xi:
                        cur, mv = parent[cur]
                        trace.append(mv)
                    trace.reverse()
                    return trace
                nxt.append(new)
        frontier = nxt
    ids = _component_ids(seq, degree(xi))
    return NonEquivalent(ids[xi], ids[eta])


def ap_move_strategy(xi: Monomial, eta: Monomial, seq: VanishingSequence) -> Optional[bool]:
    """Constructive equivalence certifier for arithmetic-progression sequences.

    Walks two pieces of one position toward each other until one lands on a
    square occupied by the other position, strips the now-common variable and
    recurses.  Returns True when the walk certifies equivalence and None when
    it does not apply (non-AP sequence or no interlacing step available); it
    can never certify non-equivalence.
    """
    if not seq.is_arithmetic_progression():
        return None
    if degree(xi) != degree(eta) or weight(xi, seq) != weight(eta, seq):
        raise PreconditionViolated("monomials must have equal degree and weight")

    def meet(mover: Monomial, anchor: Monomial) -> Optional[Monomial]:
        # Move two mover pieces straddling a square of the anchor inward
        # (legal at every step because the sequence is an AP) until one of
        # them lands on that square.
        s_m, s_a = support(mover), support(anchor)
        for q in sorted(s_a):
            below = [p for p in s_m if p < q]
            above = [p for p in s_m if p > q]
            if below and above:
                lo, hi = max(below), min(above)
                steps = min(q - lo, hi - q)
                out = list(mover)
                out[lo] -= 1
                out[hi] -= 1
                out[lo + steps] += 1
                out[hi - steps] += 1
                return tuple(out)
        return None

    a, b = xi, eta
    for _ in range(2 * degree(xi) + 1):
        if a == b:
            return True
        common = support(a) & support(b)
        if common:
            i = min(common)
            a = tuple(k - (idx == i) for idx, k in enumerate(a))
            b = tuple(k - (idx == i) for idx, k in enumerate(b))
            continue
        moved = meet(a, b)
        if moved is not None:
            a = moved
            continue
        moved = meet(b, a)
        if moved is None:
            return None
        b = moved
    return None
