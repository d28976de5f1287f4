"""Numerical semigroups, their gaps, and Hilbert data of monomial curves.

The curve parametrized by t -> (t^{a_0} : ... : t^{a_n}) has degree a_n (after
normalization) and arithmetic genus equal to the total gap count of the two
local semigroups, one at t = 0 and one at t = infinity.  Its Hilbert function
equals the m-span of the sequence, eventually agreeing with the line
degree * m + 1 - genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .errors import EmptyGenerators, GcdNotOne, NegativeEntry
from .sequences import VanishingSequence, normalize
from .span import span_sequence


@dataclass(frozen=True)
class NumericalSemigroup:
    """Additive monoid generated by positive integers with gcd 1.

    ``gaps`` lists the positive integers that are not representable;
    ``frobenius`` is the largest gap, or -1 when there is none.
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int


@dataclass(frozen=True)
class CurveInvariants:
    """Degree and genus data of the monomial curve attached to a sequence."""

    degree: int
    gaps_at_zero: int
    gaps_at_infinity: int

    @property
    def arithmetic_genus(self) -> int:
        return self.gaps_at_zero + self.gaps_at_infinity


def semigroup_of(generators: Iterable[int]) -> NumericalSemigroup:
    """Compute the gap list of the semigroup generated by ``generators``.

    Sieve of representable integers, extended until a run of ``min(generators)``
    consecutive representable integers appears; every larger integer is then
    representable, so the sieve provably captured all gaps.
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("need at least one generator")
    if gens[0] < 1:
        raise NegativeEntry(f"generators must be >= 1, got {gens[0]}")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise GcdNotOne(f"gcd of {gens} is {g}; gap set would be infinite")
    g_min = gens[0]
    if g_min == 1:
        return NumericalSemigroup(tuple(gens), (), -1)
    bound = 2 * gens[-1]
    while True:
        representable = bytearray(bound + 1)
        representable[0] = 1
        run = 0
        for i in range(1, bound + 1):
            if any(i >= gen and representable[i - gen] for gen in gens):
                representable[i] = 1
                run += 1
                if run == g_min:
                    gaps = tuple(j for j in range(1, i + 1) if not representable[j])
                    return NumericalSemigroup(tuple(gens), gaps, gaps[-1] if gaps else -1)
            else:
                run = 0
        bound *= 2


def curve_invariants(seq: VanishingSequence) -> CurveInvariants:
    """Degree and the two local gap counts for the normalized sequence."""
    b, _, _ = normalize(seq)
    top = b[-1]
    at_zero = semigroup_of(b.entries[1:])
    at_infinity = semigroup_of(tuple(top - a for a in b.entries[:-1]))
    return CurveInvariants(
        degree=top,
        gaps_at_zero=len(at_zero.gaps),
        gaps_at_infinity=len(at_infinity.gaps),
    )


def hilbert_polynomial(seq: VanishingSequence) -> tuple[int, int]:
    """Coefficients ``(leading, constant)`` of the eventual span line
    P(m) = degree * m + 1 - genus, computed from the normalized sequence."""
    inv = curve_invariants(seq)
    return inv.degree, 1 - inv.arithmetic_genus


def stabilization_threshold(seq: VanishingSequence, m_cap: Optional[int] = None) -> Optional[int]:
    """Smallest m0 <= m_cap with span(seq, m) = P(m) for every m in [m0; m_cap].

    Returns None when even m_cap itself misses the line (no guessing beyond
    the scanned range).  Default cap: four times the normalized degree.
    """
    lead, const = hilbert_polynomial(seq)
    if m_cap is None:
        m_cap = 4 * lead
    if m_cap < 2:
        raise ValueError(f"m_cap must be >= 2, got {m_cap}")
    spans = span_sequence(seq, m_cap)
    threshold = None
    for m in range(m_cap, 0, -1):
        if spans[m - 1] == lead * m + const:
            threshold = m
        else:
            break
    return threshold
