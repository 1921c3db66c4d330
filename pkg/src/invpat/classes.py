"""
Avoidance classes and basis computation.

A :class:`PatternSet` bundles patterns with the containment order they
are read in.  :func:`class_members` lists the size-n elements of an
ambient family (involutions or matchings) avoiding the set; for the
deletion orders it runs a level sieve: an element avoids everything iff
it is not itself a pattern and each one-step deletion image avoids
everything, so membership at size n needs only the member sets at sizes
n-1 and n-2.

:func:`compute_basis` finds the minimal violators of a classical
pattern set inside a deletion order.  Searching up to twice the largest
pattern size is guaranteed to find the whole basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .containment import (Mode, PatternChecker, _iter_images,
                          check_for_mode, one_step_down)
from .core import (Perm, format_cycles, format_perm, generate_fpf,
                   generate_involutions)


@dataclass(frozen=True)
class PatternSet:
    """A finite set of patterns plus the order they are read in."""

    patterns: frozenset[Perm]
    mode: Mode

    def __init__(self, patterns, mode: Mode):
        object.__setattr__(self, "patterns",
                           frozenset(check_for_mode(tuple(p), mode) for p in patterns))
        object.__setattr__(self, "mode", mode)

    def sorted_patterns(self) -> tuple[Perm, ...]:
        return tuple(sorted(self.patterns, key=lambda p: (len(p), p)))

    def max_size(self) -> int:
        return max((len(p) for p in self.patterns), default=0)

    def __str__(self) -> str:
        body = ",".join(format_perm(p) for p in self.sorted_patterns())
        return f"{{{body}}} ({self.mode.value})"


def _ambient_generator(mode: Mode):
    if mode is Mode.F:
        return generate_fpf
    if mode in (Mode.I, Mode.IPRIME):
        return generate_involutions
    raise ValueError("ambient must be one of the involution/matching orders")


# cache: (patterns, mode) -> list of member sets per size, grown on demand
_SIEVE: dict[tuple[frozenset[Perm], Mode], list[set[Perm]]] = {}


def _sieve_members(ps: PatternSet, n: int) -> set[Perm]:
    """Avoiders of ps at size n in ps.mode's own ambient family, via the level sieve."""
    key = (ps.patterns, ps.mode)
    levels = _SIEVE.setdefault(key, [])
    gen = _ambient_generator(ps.mode)
    mode = ps.mode
    while len(levels) <= n:
        m = len(levels)
        members: set[Perm] = set()
        if not (mode is Mode.F and m % 2):
            for tau in gen(m):
                if tau in ps.patterns:
                    continue
                if all(img in levels[len(img)] for img in _iter_images(tau, mode)):
                    members.add(tau)
        levels.append(members)
    return levels[n]


def class_members(ps: PatternSet, ambient_mode: Mode, n: int,
                  method: str = "auto") -> set[Perm]:
    """
    Size-n elements of the ambient family avoiding ps under ps.mode.

    The ambient only picks the ground set (involutions for I/Iprime,
    matchings for F); the avoidance order is the pattern set's own.
    ``method`` selects between the per-element embedding search
    ("embed", cheap for a few small patterns) and the level sieve
    ("sieve", cheap for many patterns since its cost is per element,
    not per pattern); "auto" picks by pattern count.  The two routes
    agree; the tests cross-check them.

    >>> sorted(class_members(PatternSet([(1, 3, 2)], Mode.I), Mode.I, 3))
    [(1, 2, 3), (2, 1, 3), (3, 2, 1)]
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    gen = _ambient_generator(ambient_mode)
    if ps.mode is Mode.CLASSICAL:
        checker = PatternChecker(ps.patterns, Mode.CLASSICAL)
        return {tau for tau in gen(n) if not checker.contains_any(tau)}
    if ambient_mode is not Mode.F and ps.mode is Mode.F:
        raise ValueError("F-mode pattern sets only filter matchings")
    if method == "auto":
        method = "sieve" if len(ps.patterns) > 3 else "embed"
    if method == "embed":
        checker = PatternChecker(ps.patterns, ps.mode)
        return {tau for tau in gen(n) if not checker.contains_any(tau)}
    if method != "sieve":
        raise ValueError(f"unknown method {method!r}")
    members = _sieve_members(ps, n)
    if ambient_mode is Mode.F and ps.mode is not Mode.F:
        from .core import is_fpf

        return {tau for tau in members if is_fpf(tau)}
    return set(members)


def is_minimal_violator(tau: Perm, pi: PatternSet, ambient: Mode) -> bool:
    """
    True if tau classically contains a pattern of pi while every one-step
    deletion image (in the ambient order) avoids all of them.

    >>> is_minimal_violator((4, 3, 2, 1), PatternSet([(3, 2, 1)], Mode.CLASSICAL), Mode.F)
    True
    >>> is_minimal_violator((5, 4, 3, 2, 1), PatternSet([(3, 2, 1)], Mode.CLASSICAL), Mode.I)
    False
    """
    if pi.mode is not Mode.CLASSICAL:
        raise ValueError("violated set must be classical")
    tau = check_for_mode(tau, ambient)
    checker = PatternChecker(pi.patterns, Mode.CLASSICAL)
    if not checker.contains_any(tau):
        return False
    return all(not checker.contains_any(img) for img in one_step_down(tau, ambient))


@dataclass
class BasisReport:
    """Minimal violators grouped by size, plus how they were found."""

    elements: dict[int, tuple[Perm, ...]]
    search_bound: int
    ambient: Mode
    violated_set: PatternSet
    member_counts: dict[int, int] = field(default_factory=dict)

    def all_elements(self) -> tuple[Perm, ...]:
        return tuple(p for size in sorted(self.elements) for p in self.elements[size])

    def max_size(self) -> int:
        """Largest basis-element size found; compare with the search bound."""
        return max(self.elements, default=0)

    def to_text(self) -> str:
        lines = [f"basis of avoiders of {self.violated_set} in "
                 f"{self.ambient.value} order, searched to size {self.search_bound}"
                 f" (largest element found: {self.max_size()})"]
        for size in sorted(self.elements):
            lines.append(f"size {size}:")
            for p in self.elements[size]:
                lines.append(f"  {format_perm(p)}  {format_cycles(p)}")
        return "\n".join(lines)

    def to_rows(self) -> list[str]:
        rows = ["size\tone_line\tcycle_form"]
        for size in sorted(self.elements):
            for p in self.elements[size]:
                rows.append(f"{size}\t{format_perm(p)}\t{format_cycles(p)}")
        return rows


def compute_basis(pi: PatternSet, ambient: Mode, bound: int | None = None) -> BasisReport:
    """
    Basis of the class of classical avoiders of pi inside the ambient
    order, by a size sweep with the member sets of the two previous
    sizes kept for the minimality lookups.

    ``bound`` defaults to twice the largest pattern size, which is
    enough to find every basis element.

    >>> compute_basis(PatternSet([(3, 2, 1)], Mode.CLASSICAL), Mode.I).all_elements()
    ((3, 2, 1),)
    >>> compute_basis(PatternSet([(3, 2, 1)], Mode.CLASSICAL), Mode.F).all_elements()
    ((4, 3, 2, 1),)
    """
    if pi.mode is not Mode.CLASSICAL:
        raise ValueError("compute_basis expects a classical pattern set")
    if not pi.patterns:
        raise ValueError("empty pattern set has an empty basis at every bound")
    max_pat = pi.max_size()
    if bound is None:
        bound = 2 * max_pat
    if bound < max_pat:
        raise ValueError(f"bound {bound} is below the largest pattern size {max_pat}")

    gen = _ambient_generator(ambient)
    checker = PatternChecker(pi.patterns, Mode.CLASSICAL)
    members: dict[int, set[Perm]] = {0: {()}}
    found: dict[int, tuple[Perm, ...]] = {}
    counts: dict[int, int] = {0: 1}
    for m in range(1, bound + 1):
        if ambient is Mode.F and m % 2:
            members[m] = set()
            counts[m] = 0
            continue
        mem: set[Perm] = set()
        basis_here: list[Perm] = []
        for tau in gen(m):
            if not checker.contains_any(tau):
                mem.add(tau)
            elif all(img in members[len(img)] for img in one_step_down(tau, ambient)):
                basis_here.append(tau)
        members[m] = mem
        counts[m] = len(mem)
        if basis_here:
            found[m] = tuple(basis_here)
        members.pop(m - 2, None)
    return BasisReport(found, bound, ambient, pi, counts)
