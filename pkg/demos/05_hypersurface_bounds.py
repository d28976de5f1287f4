# The counting bounds: how many independent degree-m hypersurfaces can
# contain a non-degenerate curve in P^n, what the runner-up count is, and
# how the inflection budget of a degree-(n+1) genus-1 system splits into
# (n+1)^2 unit-weight points.

from math import comb

from spanlab import (
    ap_sequence,
    check_weight_budget,
    inflection_weight,
    max_hypersurfaces,
    monomial_system,
    near_ap_high,
    next_hypersurface_bound,
    pluecker_budget,
    quadric_bound,
    span,
    sym_power_dim,
)

print("n  m  max_count  next_count")
for n in (2, 3, 4, 5):
    for m in (2, 3):
        print(f"{n}  {m}  {max_hypersurfaces(n, m):9d}  {next_hypersurface_bound(n, m):10d}")
print()

# For quadrics the curve case matches the classical codimension formula.
for n in (3, 4, 5):
    assert max_hypersurfaces(n, 2) == quadric_bound(n - 1)
print("max quadric count equals c(c+1)/2 with c = n-1: checked for n=3..5")
print()

# Monomial jets attain the bounds exactly.
for n in (3, 4):
    for m in (2, 3):
        total = comb(m + n, n)
        ap_dim = sym_power_dim(monomial_system(ap_sequence(n, 1)), m)
        jump_dim = sym_power_dim(monomial_system(near_ap_high(n, 1)), m)
        print(f"n={n} m={m}: progression curve lies on {total - ap_dim}"
              f" (= max {max_hypersurfaces(n, m)}), jump curve on {total - jump_dim}"
              f" (= next {next_hypersurface_bound(n, m)})")
print()

# The inflection budget of a degree-(n+1) genus-1 system is (n+1)^2, split
# into unit weights by the jump sequence.
for n in (2, 3, 4):
    seq = near_ap_high(n, 1)
    budget = pluecker_budget(n, n + 1, 1)
    print(f"n={n}: budget {budget} = {(n + 1) ** 2},"
          f" jump-sequence weight {inflection_weight(seq)},"
          f" pair span {span(seq, 2)} = 2n+2,"
          f" {budget} unit points fit: {check_weight_budget(n, n + 1, 1, [1] * budget)}")
