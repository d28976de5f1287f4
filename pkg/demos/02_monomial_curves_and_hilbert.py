# Each sequence has a monomial curve t -> (t^{a_0} : ... : t^{a_n}); its
# degree and arithmetic genus are pure semigroup data, and its Hilbert
# function is the span.  Watch the span lock onto the line
# degree*m + 1 - genus.

from spanlab import (
    curve_invariants,
    hilbert_polynomial,
    semigroup_of,
    span_sequence,
    stabilization_threshold,
    validate,
)

# Gap counts are computed by an exact sieve.
for gens in [(2, 3), (3, 5), (3, 4, 5)]:
    sg = semigroup_of(gens)
    print(f"semigroup <{','.join(map(str, gens))}>: gaps {list(sg.gaps)}"
          f" (frobenius {sg.frobenius})")
print()

for entries in [(0, 1, 2, 3), (0, 1, 3), (0, 1, 2, 4), (0, 3, 5)]:
    seq = validate(entries)
    inv = curve_invariants(seq)
    lead, const = hilbert_polynomial(seq)
    cap = 4 * lead
    threshold = stabilization_threshold(seq, cap)
    spans = span_sequence(seq, cap)
    sign = "+" if const >= 0 else "-"
    print(f"{seq.to_text()}: degree {inv.degree}, genus {inv.arithmetic_genus}"
          f" ({inv.gaps_at_zero} gaps at zero, {inv.gaps_at_infinity} at infinity)")
    print(f"  eventual line {lead}m {sign} {abs(const)}, followed from m = {threshold}")
    marks = " ".join(
        f"{s}{'*' if s == lead * m + const else ' '}"
        for m, s in enumerate(spans[:8], start=1))
    print(f"  spans m=1..8: {marks}  (* = on the line)")
    print()
