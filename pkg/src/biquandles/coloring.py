"""Biquandle colorings of long Gauss codes.

A coloring assigns a carrier element to every segment. At a positive
crossing with under-input a and over-input b the outputs are fixed by the
switch: under-out = up[a, b], over-out = down[b, a]. A negative crossing is
the same relation read backwards, so its outputs come from the inverse pair
map: under-out = upbar[under-in, over-in], over-out = downbar[over-in,
under-in].

Enumeration walks the passes left to right. Each pass needs the opposite
strand's input color; when that segment has not been reached yet, all n
values are branched and the branch is pruned the moment propagation
determines the guessed segment. Output is independent of branch order:
colorings are returned in lexicographic order of their segment vectors.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .algebra import FiniteBiquandle
from .diagram import LongGaussCode, incidence

# operation table per (role, sign): indices into the [up, down, upbar,
# downbar] stack
_TABLE_INDEX = {("U", 1): 0, ("O", 1): 1, ("U", -1): 2, ("O", -1): 3}


def pass_arrays(code: LongGaussCode) -> tuple[np.ndarray, np.ndarray]:
    """Kernel inputs: per-pass table selector and opposite-input segment."""
    tid = np.array(
        [_TABLE_INDEX[(p.role, p.sign)] for p in code.passes], dtype=np.int64
    )
    opp = code.partner.astype(np.int64)  # segment j-1 for 1-based partner j
    return tid, opp


def check_coloring(
    code: LongGaussCode, bq: FiniteBiquandle, colors
) -> tuple[bool, int | None]:
    """Do both crossing equations hold everywhere? Returns (ok, witness).

    The witness is the first violating crossing id in first-appearance
    order. Length or range mismatches raise ValueError.
    """
    colors = list(colors)
    if len(colors) != code.segments:
        raise ValueError(
            f"coloring has {len(colors)} entries, code has {code.segments} segments"
        )
    if any(not 0 <= v < bq.n for v in colors):
        raise ValueError("coloring entry out of range")
    for c, inc in incidence(code).items():
        sign = next(p.sign for p in code.passes if p.crossing == c)
        a, b = colors[inc.under_in], colors[inc.over_in]
        if sign > 0:
            ok = (
                colors[inc.under_out] == bq.up[a, b]
                and colors[inc.over_out] == bq.down[b, a]
            )
        else:
            ok = (
                colors[inc.under_out] == bq.upbar[a, b]
                and colors[inc.over_out] == bq.downbar[b, a]
            )
        if not ok:
            return False, c
    return True, None


def coloring_matrix(
    code: LongGaussCode, bq: FiniteBiquandle, initial: int | None = None
) -> np.ndarray:
    """All colorings as a (k, segments) int64 matrix, rows sorted."""
    stack = bq.op_stack()  # raises unless at least a birack
    if initial is not None and not 0 <= initial < bq.n:
        raise ValueError(f"initial color {initial} out of range 0..{bq.n - 1}")
    tid, opp = pass_arrays(code)
    return _kernels.enumerate_segments(
        stack, tid, opp, bq.n, -1 if initial is None else int(initial)
    )


def enumerate_colorings(
    code: LongGaussCode, bq: FiniteBiquandle, initial: int | None = None
) -> list[tuple[int, ...]]:
    """Duplicate-free list of colorings in lexicographic order."""
    return [tuple(int(v) for v in row) for row in coloring_matrix(code, bq, initial)]


def count_colorings(code: LongGaussCode, bq: FiniteBiquandle) -> int:
    return int(coloring_matrix(code, bq).shape[0])


def count_fixed(code: LongGaussCode, bq: FiniteBiquandle, initial: int) -> int:
    return int(coloring_matrix(code, bq, initial).shape[0])


def counts_by_initial(code: LongGaussCode, bq: FiniteBiquandle) -> np.ndarray:
    """Vector of coloring counts per initial-arc color, from one sweep."""
    segs = coloring_matrix(code, bq)
    return np.bincount(segs[:, 0], minlength=bq.n)
