"""
Lattice-path machinery and the bijection chain onto 132-avoiding
involutions.

Path families (words read left to right, heights starting at 0):

- Motzkin word: 'U', 'D', 'L' steps, height never negative, ends at 0.
- Dyck word: Motzkin word with no 'L'.
- Labeled Dyck path: every down step from height h carries a label in
  1..ceil(h/2) (up steps implicitly carry 1).
- Laguerre history: Motzkin-like word with two level-step flavors 'L1'
  (node with a left child only) and 'L2' (right child only); every step
  at start height h carries a label in 1..h+1.
- Level path on even heights ("Andre path"): Motzkin word whose level
  steps all sit at even height, down steps labeled as in labeled Dyck
  paths.

Label-bound conventions are frozen by the exhaustive bijectivity and
round-trip tests: down-step bounds use the height the step descends
from, history bounds use the height the step starts at, plus one.

The maps:

- ``skew_half``: involutions with no independent cycle pair are skew
  sums (sigma^-1 above an optional central fixed point above sigma), so
  they are read off from their second half.
- ``perm_to_history``: permutation -> increasing binary tree (split at
  the minimum) -> insertion history, with the label recording which
  open slot, in in-order position, receives each vertex.
- ``dyck_to_history``: reads consecutive step pairs M_2M_3, M_4M_5, ...
  of a labeled Dyck path as U/D/L1/L2 and transports the down labels.
- ``strip_level_steps``: removes the level-step blocks of an even-level
  path, recording their sizes as a weak composition (k+1 parts: one
  leading block plus one after each even-index Dyck step).
- ``involution_to_andre``: the composite bijection from 132-avoiding
  involutions to even-level paths; level steps count fixed points.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .containment import Mode, contains_fast
from .core import (Perm, check_involution, check_permutation, fixed_points,
                   inverse, skew_sum, standardize, two_cycles)

# ---------------------------------------------------------------------------
# path types


def heights(word) -> list[int]:
    """Heights after each step (level steps of any flavor keep height)."""
    h = 0
    out = []
    for s in word:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
        out.append(h)
    return out


def check_motzkin(word: str) -> str:
    h = 0
    for s in word:
        if s not in "UDL":
            raise ValueError(f"bad step {s!r} in {word!r}")
        h += (s == "U") - (s == "D")
        if h < 0:
            raise ValueError(f"path dips below zero: {word!r}")
    if h:
        raise ValueError(f"path does not return to zero: {word!r}")
    return word


def _down_bound(h_from: int) -> int:
    """Number of labels available to a down step descending from h_from."""
    return (h_from + 1) // 2


@dataclass(frozen=True)
class LabeledDyck:
    """Dyck word plus one label per down step, left to right."""

    word: str
    down_labels: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.word or '()'} ({','.join(map(str, self.down_labels))})"

    @property
    def half_length(self) -> int:
        return len(self.word) // 2


def check_labeled_dyck(ldp: LabeledDyck) -> LabeledDyck:
    check_motzkin(ldp.word)
    if "L" in ldp.word:
        raise ValueError("Dyck word cannot contain level steps")
    downs = [i for i, s in enumerate(ldp.word) if s == "D"]
    if len(downs) != len(ldp.down_labels):
        raise ValueError("one label per down step required")
    hs = heights(ldp.word)
    for lab, i in zip(ldp.down_labels, downs):
        top = hs[i] + 1
        if not 1 <= lab <= _down_bound(top):
            raise ValueError(f"label {lab} out of range for down step from height {top}")
    return ldp


@dataclass(frozen=True)
class AndrePath:
    """Motzkin word with level steps at even height, down steps labeled."""

    word: str
    down_labels: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.word or '()'} ({','.join(map(str, self.down_labels))})"


def check_andre(ap: AndrePath) -> AndrePath:
    check_motzkin(ap.word)
    hs = heights(ap.word)
    downs = []
    for i, s in enumerate(ap.word):
        if s == "L" and hs[i] % 2:
            raise ValueError(f"level step at odd height in {ap.word!r}")
        if s == "D":
            downs.append(i)
    if len(downs) != len(ap.down_labels):
        raise ValueError("one label per down step required")
    for lab, i in zip(ap.down_labels, downs):
        top = hs[i] + 1
        if not 1 <= lab <= _down_bound(top):
            raise ValueError(f"label {lab} out of range for down step from height {top}")
    return ap


@dataclass(frozen=True)
class LaguerreHistory:
    """Steps over U/D/L1/L2, one label per step, bound = start height + 1."""

    steps: tuple[str, ...]
    labels: tuple[int, ...]

    def __str__(self) -> str:
        pretty = {"U": "U", "D": "D", "L1": "L'", "L2": "L''"}
        word = ",".join(pretty[s] for s in self.steps)
        return f"{word or '()'} ({','.join(map(str, self.labels))})"


def check_history(lh: LaguerreHistory) -> LaguerreHistory:
    if len(lh.steps) != len(lh.labels):
        raise ValueError("one label per step required")
    h = 0
    for s, lab in zip(lh.steps, lh.labels):
        if s not in ("U", "D", "L1", "L2"):
            raise ValueError(f"bad history step {s!r}")
        if not 1 <= lab <= h + 1:
            raise ValueError(f"label {lab} out of range at height {h}")
        h += (s == "U") - (s == "D")
        if h < 0:
            raise ValueError("history dips below zero")
    if h:
        raise ValueError("history does not return to zero")
    return lh


# ---------------------------------------------------------------------------
# exhaustive generators (tests lean on these)


def iter_motzkin_words(n: int, level_even_only: bool = False) -> Iterator[str]:
    word: list[str] = []

    def rec(h: int, left: int) -> Iterator[str]:
        if left == 0:
            if h == 0:
                yield "".join(word)
            return
        if h > left:
            return
        for s in "DLU":
            if s == "D" and h == 0:
                continue
            if s == "L" and level_even_only and h % 2:
                continue
            word.append(s)
            yield from rec(h + (s == "U") - (s == "D"), left - 1)
            word.pop()

    yield from rec(0, n)


def iter_dyck_words(half: int) -> Iterator[str]:
    word: list[str] = []
    n = 2 * half

    def rec(h: int, left: int) -> Iterator[str]:
        if left == 0:
            if h == 0:
                yield "".join(word)
            return
        if h > left:
            return
        for s in "DU":
            if s == "D" and h == 0:
                continue
            word.append(s)
            yield from rec(h + 1 if s == "U" else h - 1, left - 1)
            word.pop()

    yield from rec(0, n)


def _label_choices(word: str) -> Iterator[tuple[int, ...]]:
    from itertools import product

    hs = heights(word)
    bounds = [_down_bound(hs[i] + 1) for i, s in enumerate(word) if s == "D"]
    yield from product(*(range(1, b + 1) for b in bounds))


def iter_labeled_dyck(half: int) -> Iterator[LabeledDyck]:
    for word in iter_dyck_words(half):
        for labels in _label_choices(word):
            yield LabeledDyck(word, labels)


def iter_andre_paths(n: int) -> Iterator[AndrePath]:
    for word in iter_motzkin_words(n, level_even_only=True):
        for labels in _label_choices(word):
            yield AndrePath(word, labels)


def iter_laguerre_histories(n: int) -> Iterator[LaguerreHistory]:
    steps: list[str] = []
    labels: list[int] = []

    def rec(h: int, left: int) -> Iterator[LaguerreHistory]:
        if left == 0:
            if h == 0:
                yield LaguerreHistory(tuple(steps), tuple(labels))
            return
        if h > left:
            return
        for s in ("D", "L1", "L2", "U"):
            if s == "D" and h == 0:
                continue
            for lab in range(1, h + 2):
                steps.append(s)
                labels.append(lab)
                yield from rec(h + (s == "U") - (s == "D"), left - 1)
                steps.pop()
                labels.pop()

    yield from rec(0, n)


# ---------------------------------------------------------------------------
# skew-sum halving for involutions with no independent cycle pair


def _has_independent_pair(tau: Perm) -> bool:
    best = None
    for a, b in sorted(two_cycles(tau) + [(f, f) for f in fixed_points(tau)]):
        if best is not None and best < a:
            return True
        best = b if best is None else min(best, b)
    return False


def skew_half(tau: Perm) -> Perm:
    """
    Read the lower-right block of an involution of shape
    sigma^-1 (+ optional central fixed point) over sigma.

    >>> skew_half((4, 3, 2, 1))
    (2, 1)
    >>> skew_half((3, 2, 1))
    (1,)
    """
    tau = check_involution(tau)
    if _has_independent_pair(tau):
        raise ValueError("involution has an independent cycle pair")
    n = len(tau)
    return tuple(tau[(n + 1) // 2 + k] for k in range(n // 2))


def from_skew_half(sigma: Perm, odd: bool) -> Perm:
    """
    Inverse of :func:`skew_half`; ``odd`` says whether to reinsert the
    central fixed point.

    >>> from_skew_half((2, 1), False)
    (4, 3, 2, 1)
    """
    sigma = check_permutation(sigma)
    top = inverse(sigma)
    return skew_sum(skew_sum(top, (1,)), sigma) if odd else skew_sum(top, sigma)


# ---------------------------------------------------------------------------
# permutations <-> histories via increasing binary trees


def increasing_tree(sigma: Perm):
    """
    The binary tree of a permutation, splitting at the minimum: nested
    ``(label, left, right)`` triples with ``None`` for absent children.
    Labels grow downward, so reading the tree in in-order recovers the
    word.

    >>> increasing_tree((2, 1, 3))
    (1, (2, None, None), (3, None, None))
    """
    sigma = check_permutation(sigma)

    def build(lo: int, hi: int):
        if lo > hi:
            return None
        i = min(range(lo, hi + 1), key=sigma.__getitem__)
        return (sigma[i], build(lo, i - 1), build(i + 1, hi))

    return build(0, len(sigma) - 1)


def _perm_to_parents(sigma: Perm):
    """
    Split-at-the-minimum tree: returns {label: (parent, side)} and
    {label: (has_left, has_right)}; the root has parent 0.
    """
    parent: dict[int, tuple[int, str]] = {}
    child: dict[int, list[bool]] = {v: [False, False] for v in sigma}

    def build(lo: int, hi: int, par: int, side: str) -> None:
        if lo > hi:
            return
        i = min(range(lo, hi + 1), key=sigma.__getitem__)
        v = sigma[i]
        parent[v] = (par, side)
        if par:
            child[par]["lr".index(side)] = True
        build(lo, i - 1, v, "l")
        build(i + 1, hi, v, "r")

    if sigma:
        build(0, len(sigma) - 1, 0, "r")
    return parent, child


def perm_to_history(sigma: Perm) -> LaguerreHistory:
    """
    Insertion history of the increasing binary tree of sigma: the step
    of vertex i says which children it has (both = U, left = L1,
    right = L2, none = D), the label says which open slot, counted from
    the left, it fills.  The largest vertex is forced and dropped.

    >>> perm_to_history((2, 1))
    LaguerreHistory(steps=('L1',), labels=(1,))
    >>> str(perm_to_history((4, 5, 2, 3, 1)))
    "L',U,D,L'' (1,1,2,1)"
    """
    sigma = check_permutation(sigma)
    if not sigma:
        raise ValueError("need a permutation of size at least 1")
    n = len(sigma) - 1
    parent, child = _perm_to_parents(sigma)
    slots: list[tuple[int, str]] = [(0, "r")]
    steps: list[str] = []
    labels: list[int] = []
    for v in range(1, n + 2):
        spot = slots.index(parent[v])
        has_l, has_r = child[v]
        grown = [(v, "l")] * has_l + [(v, "r")] * has_r
        slots[spot:spot + 1] = grown
        if v <= n:
            steps.append({(True, True): "U", (True, False): "L1",
                          (False, True): "L2", (False, False): "D"}[(has_l, has_r)])
            labels.append(spot + 1)
    assert not slots
    return LaguerreHistory(tuple(steps), tuple(labels))


def history_to_perm(lh: LaguerreHistory) -> Perm:
    """
    Inverse of :func:`perm_to_history`: replay the insertions, then read
    the tree in in-order.

    >>> history_to_perm(LaguerreHistory(('L1',), (1,)))
    (2, 1)
    """
    lh = check_history(lh)
    n = len(lh.steps)
    kids: dict[int, dict[str, int]] = {v: {} for v in range(0, n + 2)}
    slots: list[tuple[int, str]] = [(0, "r")]
    for v in range(1, n + 2):
        if v <= n:
            step, lab = lh.steps[v - 1], lh.labels[v - 1]
        else:
            step, lab = "D", 1
        assert 1 <= lab <= len(slots)
        par, side = slots[lab - 1]
        kids[par][side] = v
        grown = {"U": [(v, "l"), (v, "r")], "L1": [(v, "l")],
                 "L2": [(v, "r")], "D": []}[step]
        slots[lab - 1:lab] = grown
    assert not slots

    out: list[int] = []

    def visit(v: int) -> None:
        if "l" in kids[v]:
            visit(kids[v]["l"])
        out.append(v)
        if "r" in kids[v]:
            visit(kids[v]["r"])

    visit(kids[0]["r"])
    return tuple(out)


# ---------------------------------------------------------------------------
# labeled Dyck paths <-> histories


def _pairs(word: str) -> list[str]:
    """History steps read from the step pairs M_2M_3, M_4M_5, ..."""
    kind = {"UU": "U", "DD": "D", "UD": "L1", "DU": "L2"}
    return [kind[word[2 * i - 1] + word[2 * i]] for i in range(1, len(word) // 2)]


def _match_downs(steps) -> dict[int, int]:
    """For each U index (0-based) the index of the D returning to its start height."""
    stack: list[int] = []
    match: dict[int, int] = {}
    for i, s in enumerate(steps):
        if s == "U":
            stack.append(i)
        elif s == "D":
            match[stack.pop()] = i
    return match


def dyck_to_history(ldp: LabeledDyck) -> LaguerreHistory:
    """
    Histories from labeled Dyck paths of one larger half-length.  The
    first and last steps are dropped; each inner step pair becomes one
    history step and the down labels ride along: a D pair donates its
    first label, its second label travels to the matching U, and the
    mixed pairs donate the label of their D.

    >>> str(dyck_to_history(LabeledDyck("UUDUUDDDUD", (1, 2, 1, 1, 1))))
    "L',U,D,L'' (1,1,2,1)"
    """
    ldp = check_labeled_dyck(ldp)
    word = ldp.word
    if not word:
        raise ValueError("need half-length at least 1")
    mu: dict[int, int] = {}
    it = iter(ldp.down_labels)
    for i, s in enumerate(word):
        if s == "D":
            mu[i] = next(it)
    steps = _pairs(word)
    match = _match_downs(steps)
    labels: list[int] = []
    for i, s in enumerate(steps):
        if s == "U":
            labels.append(mu[2 * match[i] + 2])
        elif s == "D":
            labels.append(mu[2 * i + 1])
        elif s == "L1":
            labels.append(mu[2 * i + 2])
        else:
            labels.append(mu[2 * i + 1])
    return check_history(LaguerreHistory(tuple(steps), tuple(labels)))


def history_to_dyck(lh: LaguerreHistory) -> LabeledDyck:
    """
    Inverse of :func:`dyck_to_history`.

    >>> history_to_dyck(LaguerreHistory((), ())).word
    'UD'
    """
    lh = check_history(lh)
    n = len(lh.steps)
    body = {"U": "UU", "D": "DD", "L1": "UD", "L2": "DU"}
    word = "U" + "".join(body[s] for s in lh.steps) + "D"
    match = _match_downs(lh.steps)
    mu: dict[int, int] = {2 * n + 1: 1}
    for i, s in enumerate(lh.steps):
        lab = lh.labels[i]
        if s == "D":
            mu[2 * i + 1] = lab
        elif s == "L1":
            mu[2 * i + 2] = lab
        elif s == "L2":
            mu[2 * i + 1] = lab
        else:
            mu[2 * match[i] + 2] = lab
    downs = tuple(mu[i] for i in sorted(mu))
    return check_labeled_dyck(LabeledDyck(word, downs))


# ---------------------------------------------------------------------------
# even-level paths <-> (composition, labeled Dyck path)


def strip_level_steps(ap: AndrePath) -> tuple[tuple[int, ...], LabeledDyck]:
    """
    Remove the level steps, recording block sizes: part 0 before the
    first rise, part i after the 2i-th Dyck step.  Down labels carry
    over unchanged.

    >>> strip_level_steps(AndrePath("UDLL", (1,)))
    ((0, 2), LabeledDyck(word='UD', down_labels=(1,)))
    """
    ap = check_andre(ap)
    dyck = ap.word.replace("L", "")
    k, rem = divmod(len(dyck), 2)
    assert rem == 0
    comp = [0] * (k + 1)
    seen = 0
    for s in ap.word:
        if s == "L":
            assert seen % 2 == 0
            comp[seen // 2] += 1
        else:
            seen += 1
    return tuple(comp), check_labeled_dyck(LabeledDyck(dyck, ap.down_labels))


def insert_level_steps(comp: tuple[int, ...], ldp: LabeledDyck) -> AndrePath:
    """
    Inverse of :func:`strip_level_steps`: comp must have one part per
    even position of the Dyck word plus the leading one.

    >>> insert_level_steps((0, 2), LabeledDyck("UD", (1,))).word
    'UDLL'
    """
    ldp = check_labeled_dyck(ldp)
    k = ldp.half_length
    if len(comp) != k + 1 or any(y < 0 for y in comp):
        raise ValueError(f"composition must have {k + 1} nonnegative parts")
    out = ["L" * comp[0]]
    for i in range(k):
        out.append(ldp.word[2 * i:2 * i + 2])
        out.append("L" * comp[i + 1])
    return check_andre(AndrePath("".join(out), ldp.down_labels))


# ---------------------------------------------------------------------------
# the composite bijection


def remove_fixed_points(tau: Perm) -> tuple[Perm, tuple[int, ...]]:
    """
    Standardize away the fixed points; returns the matching and the
    vacated positions.

    >>> remove_fixed_points((2, 1, 3, 5, 4))
    ((2, 1, 4, 3), (3,))
    """
    tau = check_involution(tau)
    fixes = fixed_points(tau)
    rho = standardize(tuple(v for i, v in enumerate(tau) if v != i + 1))
    return rho, tuple(fixes)


def insert_fixed_points(rho: Perm, positions: tuple[int, ...]) -> Perm:
    """
    Inverse of :func:`remove_fixed_points`.

    >>> insert_fixed_points((2, 1, 4, 3), (3,))
    (2, 1, 3, 5, 4)
    """
    from .core import check_fpf

    rho = check_fpf(rho)
    n = len(rho) + len(positions)
    spots = set(positions)
    if len(spots) != len(positions) or not all(1 <= p <= n for p in positions):
        raise ValueError("fixed-point positions out of range or repeated")
    rest = [p for p in range(1, n + 1) if p not in spots]
    out = [0] * n
    for p in spots:
        out[p - 1] = p
    for i, v in enumerate(rho):
        out[rest[i] - 1] = rest[v - 1]
    return check_involution(tuple(out))


def involution_to_andre(tau: Perm) -> AndrePath:
    """
    The composite bijection from 132-avoiding involutions to even-level
    paths of the same length; level steps count fixed points.

    >>> involution_to_andre((1, 2, 3)).word
    'LLL'
    >>> str(involution_to_andre((2, 1)))
    'UD (1)'
    """
    tau = check_involution(tau)
    if contains_fast(tau, (1, 3, 2), Mode.I):
        raise ValueError("involution contains 132 in the deletion order")
    cyc = two_cycles(tau)
    k = len(cyc)
    fixes = fixed_points(tau)
    # openers first, then closers and fixed points interleaved
    closers = sorted(b for _, b in cyc)
    assert all(a <= k for a, _ in cyc)
    comp = [0] * (k + 1)
    for f in fixes:
        comp[sum(1 for b in closers if b < f)] += 1
    if k == 0:
        return insert_level_steps(tuple(comp), LabeledDyck("", ()))
    # the matching's second half: closer values in position order,
    # already a permutation of 1..k because the openers sit first
    support = [v for i, v in enumerate(tau) if v != i + 1]
    sigma = standardize(tuple(support[k:]))
    lh = perm_to_history(sigma)
    ldp = history_to_dyck(lh)
    return insert_level_steps(tuple(comp), ldp)


def andre_to_involution(ap: AndrePath) -> Perm:
    """
    Inverse of :func:`involution_to_andre`.

    >>> andre_to_involution(AndrePath("UD", (1,)))
    (2, 1)
    """
    comp, ldp = strip_level_steps(ap)
    k = ldp.half_length
    n = len(ap.word)
    if k == 0:
        return tuple(range(1, n + 1))
    sigma = history_to_perm(dyck_to_history(ldp))
    rho = from_skew_half(sigma, odd=False)
    # closer slots: after the k openers, y_0 fixed points, closer, y_1
    # fixed points, closer, ...
    out = [0] * n
    pos = k
    slots: list[int] = []
    for i in range(k):
        pos += comp[i]
        pos += 1
        slots.append(pos)
    for j in range(k):
        opener = rho[k + j]
        out[slots[j] - 1] = opener
        out[opener - 1] = slots[j]
    for p in range(1, n + 1):
        if not out[p - 1]:
            out[p - 1] = p
    return check_involution(tuple(out))
