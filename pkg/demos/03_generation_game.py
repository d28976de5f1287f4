# Whether the relations of a monomial curve are generated by quadrics is a
# board game: positions are monomials (pieces on squares 0..n), a move
# exchanges two pieces for an equal-weight pair.  Connected positions of
# equal weight = relations reachable from degree-2 ones.

from spanlab import (
    NonEquivalent,
    bigraded_dims,
    equivalence_report,
    generation_degree,
    move_trace,
    validate,
    weight_class,
)

# The progression (0,1,2,3): every equal-weight class is connected by moves.
seq = validate([0, 1, 2, 3])
rep = equivalence_report(seq, 4, 2)
print(f"{seq.to_text()}: degree-4 classes {rep.weight_classes}, "
      f"components {rep.components} -> generated: {rep.generated}")
xi, eta = (2, 0, 0, 2), (0, 2, 2, 0)
print(f"  a trace {xi} -> {eta}: {move_trace(xi, eta, seq)}")
print()

# The cuspidal cubic (0,1,3): no quadric relations exist at all, and the
# weight-3 class at degree 3 splits, so a cubic generator is genuinely needed.
seq = validate([0, 1, 3])
print(f"{seq.to_text()}: degree-2 relations: {bigraded_dims(seq, 2).relation_dim}")
rep = equivalence_report(seq, 3, 2)
print(f"  degree-3 split witness: {rep.witness}")
outcome = move_trace(*rep.witness, seq)
assert isinstance(outcome, NonEquivalent)
print(f"  no move sequence joins them (components {outcome.source_component}"
      f" vs {outcome.target_component})")
print(f"  weight-3 positions: {weight_class(seq, 3, 3)}")
print(f"  generation degree observed: {generation_degree(seq, 8)}")
print()

# Near-progressions behave like progressions despite the jump.
for entries in [(0, 1, 2, 4), (0, 2, 3, 4)]:
    seq = validate(entries)
    print(f"{seq.to_text()}: generation degree {generation_degree(seq, 8)}")
