"""
invpat: exact pattern containment, enumeration and bijections for
involutions and perfect matchings.

The package is organized around plain tuples in one-line notation; see
:mod:`invpat.core` for the conventions.  Highlights:

- :mod:`invpat.containment`: the four containment orders and the fast
  embedding test validated against the deletion-order reference.
- :mod:`invpat.classes`: avoidance classes and basis computation.
- :mod:`invpat.enumeration`: exact counts, closed forms, and the
  two-variable continued-fraction series.
- :mod:`invpat.bijections`: lattice-path machinery (Motzkin, Dyck,
  Laguerre histories, labeled paths with level steps at even height)
  and the bijection chain onto 132-avoiding involutions.
- :mod:`invpat.mcgovern`: the smoothness pattern sets and exhaustive
  equality sweeps.
- :mod:`invpat.cli`: the ``invpat`` command.
"""
from .containment import (Mode, avoids_all, contains, contains_classical,
                          contains_fast, down_set, one_step_down)
from .core import (format_cycles, format_perm, generate_fpf,
                   generate_involutions, generate_permutations, inverse,
                   parse_perm, reverse_complement, skew_sum, standardize)

__all__ = [
    "Mode", "avoids_all", "contains", "contains_classical", "contains_fast",
    "down_set", "one_step_down", "format_cycles", "format_perm",
    "generate_fpf", "generate_involutions", "generate_permutations",
    "inverse", "parse_perm", "reverse_complement", "skew_sum", "standardize",
]
