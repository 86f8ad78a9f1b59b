"""Seeded Reidemeister-move harness.

Invariance of the fixed-initial coloring counts and of the longitude
families is checked empirically: starting from a base code, a reproducible
random walk applies first- and second-move insertions and deletions, and
after every step the per-initial counts and families must match the base
values. The third move is covered by the golden fixture pairs, compared
side against side.

Crossing counts are capped and second-move spans kept short so the
enumeration frontier stays small; fresh crossing ids increase monotonically
over the whole walk.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteBiquandle
from .coloring import counts_by_initial
from .diagram import (
    R1_KINDS,
    R2_VARIANTS,
    LongGaussCode,
    fresh_crossing_id,
    r1_delete,
    r1_deletable_positions,
    r1_insert,
    r2_delete,
    r2_deletable_pairs,
    r2_insert,
    r3_fixture_pairs,
)
from .longitude import families_by_initial

MAX_CROSSINGS = 10
MAX_R2_SPAN = 6


@dataclass
class HarnessReport:
    trials: int
    moves: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    r3_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _snapshot(code: LongGaussCode, bq: FiniteBiquandle):
    return counts_by_initial(code, bq), families_by_initial(code, bq)


def _random_move(
    code: LongGaussCode, rng: random.Random, next_id: int
) -> tuple[LongGaussCode, str, int]:
    options = []
    if code.crossings < MAX_CROSSINGS:
        options += ["r1_insert", "r2_insert"]
    r1_spots = r1_deletable_positions(code)
    r2_spots = r2_deletable_pairs(code)
    if r1_spots:
        options.append("r1_delete")
    if r2_spots:
        options.append("r2_delete")
    if not options:  # size cap hit with nothing deletable; insert anyway
        options = ["r1_insert"]
    kind = rng.choice(options)
    if kind == "r1_insert":
        pos = rng.randint(0, len(code))
        k = rng.choice(R1_KINDS)
        return r1_insert(code, pos, k, crossing_id=next_id), f"r1_insert@{pos}:{k}", next_id + 1
    if kind == "r2_insert":
        pos_a = rng.randint(0, len(code))
        pos_b = min(len(code), pos_a + rng.randint(0, MAX_R2_SPAN))
        v = rng.choice(R2_VARIANTS)
        return (
            r2_insert(code, pos_a, pos_b, v, crossing_ids=(next_id, next_id + 1)),
            f"r2_insert@({pos_a},{pos_b}):{v}",
            next_id + 2,
        )
    if kind == "r1_delete":
        pos = rng.choice(r1_spots)
        return r1_delete(code, pos), f"r1_delete@{pos}", next_id
    i, j = rng.choice(r2_spots)
    return r2_delete(code, i, j), f"r2_delete@({i},{j})", next_id


def run_move_harness(
    base: LongGaussCode, bq: FiniteBiquandle, trials: int, seed: int
) -> HarnessReport:
    """Random-walk the move space and compare every step against the base."""
    report = HarnessReport(trials=trials)
    base_counts, base_families = _snapshot(base, bq)
    rng = random.Random(seed)
    code = base
    next_id = fresh_crossing_id(base)
    for t in range(trials):
        code, desc, next_id = _random_move(code, rng, next_id)
        report.moves.append(desc)
        counts, families = _snapshot(code, bq)
        if not np.array_equal(counts, base_counts):
            report.failures.append(
                f"trial {t} ({desc}): per-initial counts changed: "
                f"{counts.tolist()} != {base_counts.tolist()}"
            )
        elif families != base_families:
            bad = next(p for p in range(bq.n) if families[p] != base_families[p])
            report.failures.append(
                f"trial {t} ({desc}): longitude family changed at initial {bad}"
            )
    for idx, (left, right) in enumerate(r3_fixture_pairs()):
        report.r3_pairs += 1
        lc, lf = _snapshot(left, bq)
        rc, rf = _snapshot(right, bq)
        if not np.array_equal(lc, rc):
            report.failures.append(f"r3 fixture {idx}: per-initial counts differ")
        elif lf != rf:
            bad = next(p for p in range(bq.n) if lf[p] != rf[p])
            report.failures.append(
                f"r3 fixture {idx}: longitude family differs at initial {bad}"
            )
    return report
