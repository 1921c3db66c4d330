"""
The four containment orders, side by side.

Classical containment looks for any subsequence in the right relative
order.  The deletion orders on involutions additionally respect cycle
structure: a pattern is contained only if it can be reached by deleting
2-cycles, deleting fixed points, or squashing an adjacent 2-cycle into
a fixed point.  On matchings only the first relation applies, which
makes the order strictly blinder than classical containment.
"""
from invpat.containment import (Mode, contains, contains_classical,
                                contains_fast, down_set, one_step_down)
from invpat.core import format_perm, parse_perm

tau = parse_perm("21647358")
print("one-step deletions of 2143:",
      sorted(format_perm(t) for t in one_step_down(parse_perm("2143"), Mode.I)))
print("21647358 contains 1432 in the deletion order:",
      contains(tau, parse_perm("1432"), Mode.I))

# squashing is what separates the full order from the two-relation one
print("\n21 -> 1 with squashing:", contains((2, 1), (1,), Mode.I))
print("21 -> 1 without:        ", contains((2, 1), (1,), Mode.IPRIME))

# the showpiece separation on matchings: 65872143 contains 2143 as a
# subsequence, but no pair of its cycles is independent
rho = parse_perm("65872143")
print("\n65872143 contains 2143 classically:",
      contains_classical(rho, parse_perm("2143")))
print("65872143 contains 2143 as a matching:",
      contains(rho, parse_perm("2143"), Mode.F))

# the embedding search agrees with the deletion walk everywhere; it is
# the production path
print("\nfast test agrees:",
      contains_fast(rho, parse_perm("2143"), Mode.F)
      == contains(rho, parse_perm("2143"), Mode.F))

print("\neverything below 3412:",
      sorted((len(t), format_perm(t)) for t in down_set(parse_perm("3412"), Mode.I)))
