"""Exact truncated power series, jet systems, and rank-based dimension data.

A jet system is a tuple of n+1 local sections given by rational coefficient
lists.  Sections are polynomials by default (coefficients beyond the stored
ones are exactly zero), so every product and rank below is computed without
any truncation loss; a system may instead declare an explicit truncation, in
which case requests beyond the stored coefficients fail loudly and every rank
is re-checked at a higher truncation before being trusted.

All dimensions are exact ranks of rational matrices; no floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from . import _linalg
from .errors import (
    DegenerateWithinTruncation,
    HypothesisFailed,
    NotLinearOnRange,
    PropagationFailed,
    TooShort,
    TruncationMismatch,
    TruncationTooSmall,
)
from .monomial_ideal import equivalence_report, monomials_of_degree, weight
from .sequences import VanishingSequence
from .span import span

_GUARD = 4  # default slack above m*a_n for truncated-mode working precision


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact rational coefficients c_0..c_{N-1} modulo t^N."""

    coefficients: tuple[Fraction, ...]

    @property
    def truncation(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_coefficients(cls, values: Sequence, truncation: int) -> "TruncatedSeries":
        coeffs = [_as_fraction(v) for v in values[:truncation]]
        coeffs.extend([Fraction(0)] * (truncation - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def t_power(cls, k: int, truncation: int) -> "TruncatedSeries":
        coeffs = [Fraction(0)] * truncation
        if 0 <= k < truncation:
            coeffs[k] = Fraction(1)
        return cls(tuple(coeffs))

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient; None when zero mod t^N."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def _check(self, other: "TruncatedSeries"):
        if self.truncation != other.truncation:
            raise TruncationMismatch(
                f"truncations differ: {self.truncation} vs {other.truncation}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.truncation
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients[: n - i]):
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def scale(self, c) -> "TruncatedSeries":
        c = _as_fraction(c)
        return TruncatedSeries(tuple(c * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return self.order() is None


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    last = -1
    for i, c in enumerate(coeffs):
        if c:
            last = i
    return tuple(coeffs[: last + 1])


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction], cap: Optional[int] = None):
    n = len(a) + len(b) - 1 if a and b else 0
    if cap is not None:
        n = min(n, cap)
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j < n:
                    out[i + j] += x * y
    return out


@dataclass(frozen=True)
class JetSystem:
    """n+1 local sections as rational coefficient lists.

    ``truncation = None`` means the sections are exact polynomials; an integer
    N means coefficients from t^N on are unknown and any computation needing
    them raises ``TruncationTooSmall``.
    """

    sections: tuple[tuple[Fraction, ...], ...]
    truncation: Optional[int] = None

    def __post_init__(self):
        if len(self.sections) < 2:
            raise TooShort("a jet system needs at least two sections")
        cleaned = tuple(_trim([_as_fraction(c) for c in sec]) for sec in self.sections)
        object.__setattr__(self, "sections", cleaned)
        if self.truncation is not None:
            if any(len(sec) > self.truncation for sec in cleaned):
                raise TruncationMismatch("a section carries coefficients beyond the declared truncation")

    @property
    def n(self) -> int:
        return len(self.sections) - 1

    @property
    def poly_degree(self) -> int:
        return max(len(sec) - 1 for sec in self.sections)

    def series(self, truncation: int) -> list[TruncatedSeries]:
        if self.truncation is not None and truncation > self.truncation:
            raise TruncationTooSmall(
                f"system stores coefficients to t^{self.truncation}, need t^{truncation}")
        return [TruncatedSeries.from_coefficients(sec, truncation) for sec in self.sections]


def monomial_system(seq: VanishingSequence) -> JetSystem:
    """The model system (t^{a_0}, ..., t^{a_n})."""
    return JetSystem(tuple(
        tuple([Fraction(0)] * a + [Fraction(1)]) for a in seq))


def perturbed_system(seq: VanishingSequence, tail: int = 3, seed: int = 0) -> JetSystem:
    """Monomial model plus seeded random rational tails of the given length.

    Section j is t^{a_j} + sum of random coefficients on exponents
    a_j + 1 .. a_j + tail.  Reproducible for a fixed seed.
    """
    rng = random.Random(seed)
    sections = []
    for a in seq:
        coeffs = [Fraction(0)] * (a + tail + 1)
        coeffs[a] = Fraction(1)
        for e in range(a + 1, a + tail + 1):
            coeffs[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        sections.append(tuple(coeffs))
    return JetSystem(tuple(sections))


def reparametrized_system(seq: VanishingSequence, tail: int = 2, seed: int = 0) -> JetSystem:
    """A maximality-preserving deformation of the monomial model.

    Substitutes t -> u(t) = t + (random tail) into each t^{a_j} and then adds
    random multiples of higher-order sections.  Both steps leave the span of
    the sections' products unchanged degree by degree, so the system attains
    the same dimensions as the monomial model while its matrices are dense;
    useful for exercising rank computations on systems known to be maximal.
    """
    rng = random.Random(seed)
    u = [Fraction(0), Fraction(1)] + [
        Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(tail)]
    powers: dict[int, list[Fraction]] = {0: [Fraction(1)]}
    top = seq[-1]
    acc = [Fraction(1)]
    for k in range(1, top + 1):
        acc = _poly_mul(acc, u)
        powers[k] = acc
    sections = [list(powers[a]) for a in seq]
    for j in range(len(sections)):
        for i in range(j + 1, len(sections)):
            gamma = Fraction(rng.randint(-2, 2))
            if gamma:
                longer = max(len(sections[j]), len(sections[i]))
                merged = sections[j] + [Fraction(0)] * (longer - len(sections[j]))
                for k, c in enumerate(sections[i]):
                    merged[k] += gamma * c
                sections[j] = merged
    return JetSystem(tuple(tuple(sec) for sec in sections))


def adapted_basis(system: JetSystem, guard: int = 0) -> tuple[VanishingSequence, list[TruncatedSeries]]:
    """Triangularize the sections by leading order.

    Returns the strictly increasing vanishing orders and a basis whose i-th
    member is t^{a_i} + higher order terms.  Raises
    ``DegenerateWithinTruncation`` when two sections collide to order >= N - guard:
    either the sections are dependent or more coefficients are needed.
    """
    n_coeffs = system.truncation if system.truncation is not None else system.poly_degree + 1
    rows = [list(s.coefficients) for s in system.series(n_coeffs)]

    def order_of(row):
        for i, c in enumerate(row):
            if c:
                return i
        return None

    finished: list[tuple[int, list[Fraction]]] = []
    pending = rows
    while pending:
        orders = [order_of(r) for r in pending]
        for o in orders:
            if o is None or o >= n_coeffs - guard:
                raise DegenerateWithinTruncation(
                    f"sections dependent up to order >= {n_coeffs - guard}; raise the truncation")
        best = min(range(len(pending)),
                   key=lambda i: (orders[i], sum(1 for c in pending[i] if c)))
        pivot_order = orders[best]
        pivot = pending.pop(best)
        finished.append((pivot_order, pivot))
        lead = pivot[pivot_order]
        for row in pending:
            if row[pivot_order]:
                f = row[pivot_order] / lead
                for k in range(pivot_order, n_coeffs):
                    row[k] -= f * pivot[k]
    finished.sort(key=lambda pair: pair[0])
    orders = [o for o, _ in finished]
    basis = [TruncatedSeries(tuple(c / row[o] for c in row)) for o, row in finished]
    return VanishingSequence(tuple(orders)), basis


def _integer_sections(system: JetSystem) -> list[list[int]]:
    # Per-section denominator clearing: rescaling any section by a nonzero
    # constant rescales each product row, which changes no rank, kernel
    # dimension, or weight-filtration dimension below.
    return [_linalg.clear_denominators(sec) for sec in system.sections]


def _product_rows(system: JetSystem, m: int, n_coeffs: int) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Degree-m products of the sections as integer coefficient rows.

    Row order matches ``monomials_of_degree(m, n+1)``.  Computed by a DFS over
    exponent tuples so each row costs one truncated convolution.
    """
    if system.truncation is not None and n_coeffs > system.truncation:
        raise TruncationTooSmall(
            f"system stores coefficients to t^{system.truncation}, need t^{n_coeffs}")
    secs = [sec[:n_coeffs] for sec in _integer_sections(system)]
    nvars = len(secs)
    monomials: list[tuple[int, ...]] = []
    rows: list[list[int]] = []

    def mul_int(a, b):
        out = [0] * n_coeffs
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y and i + j < n_coeffs:
                        out[i + j] += x * y
        return out

    def rec(var: int, remaining: int, prefix: tuple[int, ...], prod: list[int]):
        if var == nvars - 1:
            final = prod
            for _ in range(remaining):
                final = mul_int(final, secs[var])
            monomials.append(prefix + (remaining,))
            rows.append(final)
            return
        current = prod
        for k in range(remaining + 1):
            rec(var + 1, remaining - k, prefix + (k,), current)
            if k < remaining:
                current = mul_int(current, secs[var])

    one = [0] * n_coeffs
    one[0] = 1
    rec(0, m, (), one)
    return monomials, rows


def _working_truncations(system: JetSystem, m: int, top_order: int) -> list[int]:
    # Polynomial systems: one exact pass (products cannot exceed m * degree).
    # Truncated systems: the default working precision plus a stability
    # re-check one order block higher, as far as the stored data allows.
    if system.truncation is None:
        return [m * system.poly_degree + 1]
    needed = m * top_order + 1 + _GUARD
    if system.truncation < needed:
        raise TruncationTooSmall(
            f"need coefficients to t^{needed} for degree {m}, have {system.truncation}")
    second = min(system.truncation, needed + top_order)
    return [needed] if second == needed else [needed, second]


def sym_power_dim(system: JetSystem, m: int) -> int:
    """Dimension of the span of all degree-m products of the sections.

    Exact rank of the product matrix; for explicitly truncated systems the
    rank is re-computed at a higher truncation and must agree.
    """
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
    if m == 0:
        return 1
    seq, _ = adapted_basis(system)
    ranks = []
    for n_coeffs in _working_truncations(system, m, seq[-1]):
        _, rows = _product_rows(system, m, n_coeffs)
        ranks.append(_linalg.rank(rows))
    if len(set(ranks)) != 1:
        raise TruncationTooSmall(
            f"rank unstable under raising the truncation ({ranks}); supply more coefficients")
    return ranks[0]


def is_m_maximal(system: JetSystem, m: int) -> bool:
    """Whether the degree-m product span is as small as the weight count,
    i.e. the system attains the monomial model's dimension."""
    seq, _ = adapted_basis(system)
    return sym_power_dim(system, m) == span(seq, m)


@dataclass(frozen=True)
class FiltrationProfile:
    """Weight-filtration dimensions of the degree-m relation space.

    ``dims[j]`` is the dimension of relations of weight-level j (relations
    supported on weight >= j monomials, modulo those supported on > j);
    absent keys mean zero.  ``kernel_dim`` is the total relation dimension.
    """

    m: int
    dims: dict[int, int]
    kernel_dim: int


def filtration_profile(system: JetSystem, m: int) -> FiltrationProfile:
    """Per-weight dimensions of the kernel of the degree-m product map."""
    seq, _ = adapted_basis(system)
    profiles = []
    for n_coeffs in _working_truncations(system, m, seq[-1]):
        monomials, rows = _product_rows(system, m, n_coeffs)
        weights = [weight(xi, seq) for xi in monomials]
        order = sorted(range(len(rows)), key=lambda i: (-weights[i], monomials[i]))
        ech = _linalg.IncrementalRank()
        dims: dict[int, int] = {}
        seen = 0
        prev_nullity = 0
        idx = 0
        while idx < len(order):
            w = weights[order[idx]]
            while idx < len(order) and weights[order[idx]] == w:
                ech.add({c: v for c, v in enumerate(rows[order[idx]]) if v})
                seen += 1
                idx += 1
            nullity = seen - ech.rank
            if nullity != prev_nullity:
                dims[w] = nullity - prev_nullity
            prev_nullity = nullity
        profiles.append(FiltrationProfile(m=m, dims=dims, kernel_dim=prev_nullity))
    if len(profiles) == 2 and profiles[0] != profiles[1]:
        raise TruncationTooSmall("filtration unstable under raising the truncation")
    return profiles[0]


@dataclass(frozen=True)
class PropagationReport:
    """Verified transfer of maximality and degree-by-degree generation."""

    m: int
    t_max: int
    quotient_dims: dict[int, int]
    kernel_dims: dict[int, int]
    one_step_generates: dict[int, bool]


def check_ideal_propagation(system: JetSystem, m: int, t_max: int) -> PropagationReport:
    """Check that m-maximality propagates to all degrees t in [m; t_max].

    Hypotheses (raise ``HypothesisFailed`` when absent): the system is
    m-maximal, and for every degree d in (m; t_max] the degree-d relations of
    the adapted sequence are generated by its degree-m relations.  Under them,
    the system must be t-maximal for every t in [m; t_max] and its degree-t
    relation space must generate the degree-(t+1) one for t in [m; t_max);
    a violation raises ``PropagationFailed`` (and would falsify the theory,
    not just this library).
    """
    if not (t_max >= m >= 2):
        raise ValueError(f"need t_max >= m >= 2, got m={m}, t_max={t_max}")
    seq, _ = adapted_basis(system)
    if not is_m_maximal(system, m):
        raise HypothesisFailed(f"system is not {m}-maximal")
    for d in range(m + 1, t_max + 1):
        if not equivalence_report(seq, d, m).generated:
            raise HypothesisFailed(
                f"degree-{d} relations of {seq.entries} are not generated in degree {m}")

    nvars = len(seq)
    quotient_dims: dict[int, int] = {}
    kernel_dims: dict[int, int] = {}
    for t in range(m, t_max + 1):
        dim = sym_power_dim(system, t)
        quotient_dims[t] = dim
        kernel_dims[t] = comb(t + seq.n, seq.n) - dim
        if dim != span(seq, t):
            raise PropagationFailed(f"system failed to be {t}-maximal (dim {dim})")

    one_step: dict[int, bool] = {}
    for t in range(m, t_max):
        n_coeffs = _working_truncations(system, t, seq[-1])[-1]
        _, rows = _product_rows(system, t, n_coeffs)
        kernel = _linalg.left_kernel_basis(rows, n_coeffs)
        index = {xi: i for i, xi in enumerate(monomials_of_degree(t + 1, nvars))}
        shifted: list[list[int]] = []
        for vec in kernel:
            for var in range(nvars):
                out = [Fraction(0)] * len(index)
                for pos, xi in enumerate(monomials_of_degree(t, nvars)):
                    if vec[pos]:
                        lifted = list(xi)
                        lifted[var] += 1
                        out[index[tuple(lifted)]] = vec[pos]
                shifted.append(_linalg.clear_denominators(out))
        # The shifted relations always sit inside the degree-(t+1) kernel, so
        # their rank is at most kernel_dims[t+1]; equality is what must hold.
        ok = _linalg.rank_at_least(shifted, kernel_dims[t + 1])
        one_step[t] = ok
        if not ok:
            raise PropagationFailed(
                f"degree-{t} relations do not generate the degree-{t + 1} relations")
    return PropagationReport(m=m, t_max=t_max, quotient_dims=quotient_dims,
                             kernel_dims=kernel_dims, one_step_generates=one_step)


def degree_genus_estimate(system: JetSystem, m_lo: int, m_hi: int) -> tuple[int, int]:
    """Fit dim_m = degree * m + (1 - genus) on [m_lo; m_hi].

    Requires at least two degrees; raises ``NotLinearOnRange`` when the
    dimensions do not sit on a single affine line.
    """
    if m_hi < m_lo + 1 or m_lo < 1:
        raise ValueError(f"need m_hi > m_lo >= 1, got [{m_lo}; {m_hi}]")
    dims = [sym_power_dim(system, m) for m in range(m_lo, m_hi + 1)]
    d = dims[1] - dims[0]
    intercept = dims[0] - d * m_lo
    for offset, value in enumerate(dims):
        if value != d * (m_lo + offset) + intercept:
            raise NotLinearOnRange(
                f"dimensions {dims} on [{m_lo}; {m_hi}] are not affine-linear")
    return d, 1 - intercept
