"""
The smoothness pattern sets and the exhaustive equality sweeps.

Two families of patterns classify (rational) smoothness of the
orthogonal and symplectic orbit closures on the flag variety.  The
combinatorial content verified here: on involutions, avoiding the
augmented set in the two-relation deletion order, the full three-
relation order, and classically all coincide (checked size by size);
on matchings the cycle-respecting and classical orders coincide for the
symplectic set.

A sweep visits every involution (or matching) of each size.  Avoiders
of the set in the classical order avoid it in every coarser order too,
so only classical violators need the deletion-order check, and a
counterexample is precisely a classical violator avoiding the set in
the deletion order.  Sweeps are partitioned by the first one-line value
into restartable blocks: workers process blocks in parallel and a
checkpoint file records finished blocks, one line each, so the size-16
run can resume.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .containment import Mode, PatternChecker
from .core import (Perm, check_fpf, check_involution, generate_fpf,
                   generate_involutions, odd_fix_gap, parse_perm)

# rationally smooth symplectic orbits: matchings avoiding these
PI_PRIME: tuple[Perm, ...] = tuple(parse_perm(s) for s in """
    351624 64827153 57681324 53281764 43218765 65872143 21654387 21563487
    34127856 43217856 34128765 36154287 21754836 63287154 54821763 46513287
    21768435""".split())

# rationally smooth orthogonal orbits: involutions avoiding these in the
# two-relation order, intersected with the odd-gap condition
PI: tuple[Perm, ...] = tuple(parse_perm(s) for s in """
    14325 21543 32154 154326 124356 351624 132546 426153 153624 351426
    1243576 2135467 2137654 4321576 5276143 5472163 1657324 4651327
    57681324 65872143 13247856 34125768 34127856 64827153""".split())

# the two extra patterns that upgrade rational smoothness to smoothness
SMOOTH_EXTRA: tuple[Perm, ...] = (parse_perm("2143"), parse_perm("1324"))

PI_SMOOTH: tuple[Perm, ...] = PI + SMOOTH_EXTRA


def rational_smoothness_fpf(rho: Perm) -> bool:
    """Avoidance criterion for rational smoothness of a matching's orbit."""
    rho = check_fpf(rho)
    return not PatternChecker(PI_PRIME, Mode.F).contains_any(rho)


def rational_smoothness_involution(tau: Perm) -> bool:
    """Avoidance + odd-gap criterion for rational smoothness of an involution's orbit."""
    tau = check_involution(tau)
    return (odd_fix_gap(tau)
            and not PatternChecker(PI, Mode.IPRIME).contains_any(tau))


def smoothness_involution(tau: Perm) -> bool:
    """Avoidance criterion for smoothness of an involution's orbit."""
    tau = check_involution(tau)
    return not PatternChecker(PI_SMOOTH, Mode.IPRIME).contains_any(tau)


# ---------------------------------------------------------------------------
# equality sweeps


@dataclass
class SizeRow:
    """Tallies for one size of a sweep."""

    n: int
    total: int = 0
    classical_avoiders: int = 0
    # classical violators missed by the deletion orders
    extra_coarse: int = 0        # avoid in the two-relation / matching order
    extra_full: int = 0          # avoid in the three-relation order (part 1 only)
    counterexample: Perm | None = None

    @property
    def equal(self) -> bool:
        return self.extra_coarse == 0 and self.extra_full == 0

    def merge(self, other: "SizeRow") -> None:
        assert self.n == other.n
        self.total += other.total
        self.classical_avoiders += other.classical_avoiders
        self.extra_coarse += other.extra_coarse
        self.extra_full += other.extra_full
        if self.counterexample is None:
            self.counterexample = other.counterexample
        elif other.counterexample is not None:
            self.counterexample = min(self.counterexample, other.counterexample)


@dataclass
class SweepReport:
    part: int
    max_size: int
    rows: dict[int, SizeRow] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return all(row.equal for row in self.rows.values())

    def first_counterexample(self) -> Perm | None:
        for n in sorted(self.rows):
            if self.rows[n].counterexample is not None:
                return self.rows[n].counterexample
        return None

    def to_text(self) -> str:
        from .core import format_perm

        lines = [f"part {self.part} equality sweep to size {self.max_size}"]
        for n in sorted(self.rows):
            row = self.rows[n]
            avoid = row.classical_avoiders
            lines.append(
                f"  n={n:<3d} total={row.total:<10d} classical={avoid:<9d} "
                f"coarse={avoid + row.extra_coarse:<9d} "
                + (f"full={avoid + row.extra_full:<9d} " if self.part == 1 else "")
                + ("equal" if row.equal else "UNEQUAL counterexample="
                   + (format_perm(row.counterexample) if row.counterexample else "?")))
        verdict = "equal at all sizes" if self.equal else "EQUALITY FAILS"
        lines.append(f"  => {verdict} <= {self.max_size}")
        return "\n".join(lines)


def _sweep_block(part: int, n: int, first: int) -> SizeRow:
    """Scan one first-value block of one size; the unit of parallel work."""
    if part == 1:
        gen = generate_involutions(n, first_value=first)
        classical = PatternChecker(PI_SMOOTH, Mode.CLASSICAL)
        coarse = PatternChecker(PI_SMOOTH, Mode.IPRIME)
        full = PatternChecker(PI_SMOOTH, Mode.I)
    else:
        gen = generate_fpf(n, first_value=first)
        classical = PatternChecker(PI_PRIME, Mode.CLASSICAL)
        coarse = PatternChecker(PI_PRIME, Mode.F)
        full = None
    row = SizeRow(n)
    for tau in gen:
        row.total += 1
        if not classical.contains_any(tau):
            row.classical_avoiders += 1
            continue
        if not coarse.contains_any(tau):
            row.extra_coarse += 1
            if full is None or not full.contains_any(tau):
                row.extra_full += 1
            if row.counterexample is None:
                row.counterexample = tau
        elif full is not None and not full.contains_any(tau):
            # cannot happen: the two-relation order refines the full one
            row.extra_full += 1
            if row.counterexample is None:
                row.counterexample = tau
    return row


def _checkpoint_lines(path: str) -> dict[tuple[int, int, int], SizeRow]:
    done: dict[tuple[int, int, int], SizeRow] = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if len(parts) != 9 or parts[0] != "block":
                continue
            part, n, first = int(parts[1]), int(parts[2]), int(parts[3])
            cex = None if parts[8] == "-" else tuple(int(v) for v in parts[8].split(","))
            row = SizeRow(n, int(parts[4]), int(parts[5]), int(parts[6]),
                          int(parts[7]), cex)
            done[(part, n, first)] = row
    return done


def _append_checkpoint(path: str, part: int, n: int, first: int, row: SizeRow) -> None:
    cex = "-" if row.counterexample is None else ",".join(map(str, row.counterexample))
    with open(path, "a") as fh:
        fh.write(f"block {part} {n} {first} {row.total} {row.classical_avoiders} "
                 f"{row.extra_coarse} {row.extra_full} {cex}\n")
        fh.flush()


def _sweep_block_star(job: tuple[int, int, int]) -> SizeRow:
    return _sweep_block(*job)


def _run_sweep(part: int, max_size: int, workers: int, checkpoint: str | None,
               progress=None) -> SweepReport:
    sizes = [n for n in range(1, max_size + 1) if part == 1 or n % 2 == 0]
    jobs: list[tuple[int, int, int]] = []
    for n in sizes:
        firsts = range(1, n + 1) if part == 1 else range(2, n + 1)
        jobs.extend((part, n, first) for first in firsts)
    done = _checkpoint_lines(checkpoint) if checkpoint else {}
    todo = [j for j in jobs if j not in done]

    results: dict[tuple[int, int, int], SizeRow] = dict(done)
    if workers > 1 and len(todo) > 1:
        import multiprocessing as mp

        # big blocks last-first so the stragglers start early
        order = sorted(todo, key=lambda j: -j[1])
        with mp.Pool(workers) as pool:
            for job, row in zip(order, pool.imap(_sweep_block_star, order, chunksize=1)):
                results[job] = row
                if checkpoint:
                    _append_checkpoint(checkpoint, *job, row)
                if progress:
                    progress(job, row)
    else:
        for job in todo:
            row = _sweep_block(*job)
            results[job] = row
            if checkpoint:
                _append_checkpoint(checkpoint, *job, row)
            if progress:
                progress(job, row)

    report = SweepReport(part, max_size)
    for (p, n, first), row in sorted(results.items()):
        if p != part or n > max_size:
            continue
        if n in report.rows:
            report.rows[n].merge(row)
        else:
            report.rows[n] = SizeRow(n, row.total, row.classical_avoiders,
                                     row.extra_coarse, row.extra_full,
                                     row.counterexample)
    for n in sizes:
        report.rows.setdefault(n, SizeRow(n))
    return report


def verify_part1(max_size: int, workers: int = 1, checkpoint: str | None = None,
                 progress=None) -> SweepReport:
    """
    Involutions: the augmented pattern set is avoided classically iff in
    the two-relation order iff in the full deletion order, for every
    size <= max_size.

    >>> verify_part1(6).equal
    True
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return _run_sweep(1, max_size, workers, checkpoint, progress)


def verify_part2(max_size: int, workers: int = 1, checkpoint: str | None = None,
                 progress=None) -> SweepReport:
    """
    Matchings: the symplectic pattern set is avoided classically iff in
    the matching order, for every even size <= max_size.

    >>> verify_part2(6).equal
    True
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return _run_sweep(2, max_size, workers, checkpoint, progress)
