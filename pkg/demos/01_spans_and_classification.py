# How large is the set of m-fold sums of a sequence, and what do the
# extremes look like?  Walk through the span computation and the
# difference-shape classifier on a few hand-sized sequences.

from spanlab import chain_values, classify, power_sumset, span, validate

for entries in [(0, 1, 2, 3), (0, 1, 2, 4), (0, 2, 3, 4), (0, 1, 4, 5)]:
    seq = validate(entries)
    print(f"sequence {seq.to_text()}  (differences {seq.differences()})")
    for m in (2, 3):
        table = power_sumset(seq, m)
        print(f"  m={m}: {table.span:2d} sums: {' '.join(map(str, table.values))}")
    verdict = classify(seq, 2)
    print(f"  verdict: {verdict.verdict.value}"
          + (f", step {verdict.step}" if verdict.step else ""))
    print()

# The guaranteed chain always sits inside the sumset and has exactly mn+1
# members; for an arithmetic progression it IS the whole sumset, which is
# why progressions minimize the span.
seq = validate([0, 2, 4, 6])
m = 3
print(f"chain of {seq.to_text()} at m={m}:   {chain_values(seq, m)}")
print(f"sumset of {seq.to_text()} at m={m}:  {list(power_sumset(seq, m).values)}")
print(f"span {span(seq, m)} == m*n+1 == {m * seq.n + 1}")

# Doubling one extreme difference gives the only other small value, m*(n+1);
# everything else jumps strictly above it.
print()
for entries in [(0, 1, 2, 4), (0, 1, 3, 4)]:
    seq = validate(entries)
    s = span(seq, 3)
    print(f"{seq.to_text()}: span at m=3 is {s} "
          f"(m*n+1 = {3 * seq.n + 1}, m*(n+1) = {3 * (seq.n + 1)})")
