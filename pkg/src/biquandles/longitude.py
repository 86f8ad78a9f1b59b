"""Colored longitude words, the maps they evaluate to, and their multisets.

Walking a colored diagram left to right, every pass contributes one
up-operator token (element, exponent). The element is the crossing label
pointed at by the leftward normal of the traveled strand, which in segment
terms depends only on the pass role and crossing sign; the exponent is +1
on under-passes of positive crossings and over-passes of negative ones,
-1 otherwise. Exponent -1 means the inverse permutation of the up-action,
not the action of an inverse element.

Families and formal sums are multisets; their canonical form is a
lexicographically sorted tuple, which makes comparisons byte-stable.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .algebra import FiniteBiquandle
from .coloring import check_coloring, coloring_matrix
from .diagram import LongGaussCode

# Per (role, sign): which incidence segment of the partner pass supplies the
# token element ("in" = segment before the partner pass, "out" = after), and
# the operator exponent. Module-level so tests can mutate one case and watch
# the move harness catch the corruption.
TOKEN_CASES = {
    ("U", 1): ("in", 1),
    ("O", 1): ("out", -1),
    ("U", -1): ("out", -1),
    ("O", -1): ("in", 1),
}


def token_arrays(code: LongGaussCode) -> tuple[np.ndarray, np.ndarray]:
    """Per-pass (segment index, exponent) arrays under TOKEN_CASES."""
    m = len(code.passes)
    tok_seg = np.empty(m, dtype=np.int64)
    tok_exp = np.empty(m, dtype=np.int64)
    for t, p in enumerate(code.passes):
        which, exp = TOKEN_CASES[(p.role, p.sign)]
        j = int(code.partner[t])  # 0-based partner pass index
        tok_seg[t] = j if which == "in" else j + 1
        tok_exp[t] = exp
    return tok_seg, tok_exp


def extract_word(
    code: LongGaussCode, bq: FiniteBiquandle, colors
) -> tuple[tuple[int, int], ...]:
    """Longitude word of a valid coloring: one (element, exponent) per pass."""
    ok, bad = check_coloring(code, bq, colors)
    if not ok:
        raise ValueError(f"not a valid coloring: crossing {bad} violated")
    colors = list(colors)
    tok_seg, tok_exp = token_arrays(code)
    return tuple((colors[s], int(e)) for s, e in zip(tok_seg, tok_exp))


def apply_word(bq: FiniteBiquandle, word, x: int) -> int:
    """Fold the word over x: +1 applies the up-action, -1 its inverse."""
    if bq.up_inv is None:
        raise ValueError(f"word evaluation requires a birack, have {bq.level}")
    for u, e in word:
        x = int(bq.up[x, u]) if e > 0 else int(bq.up_inv[x, u])
    return x


def longitude_map(
    code: LongGaussCode, bq: FiniteBiquandle, colors
) -> tuple[int, ...]:
    """Image vector of the longitude map of one coloring; always a bijection."""
    word = extract_word(code, bq, colors)
    images = tuple(apply_word(bq, word, x) for x in range(bq.n))
    if sorted(images) != list(range(bq.n)):
        raise RuntimeError("internal inconsistency: longitude map is not a bijection")
    return images


def family_matrix(
    code: LongGaussCode, bq: FiniteBiquandle, initial: int | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """(colorings, images) matrices for all colorings with the given initial.

    Row r of images is the longitude map of coloring row r; coloring rows
    are in lexicographic order.
    """
    segs = coloring_matrix(code, bq, initial)
    tok_seg, tok_exp = token_arrays(code)
    images = _kernels.longitude_images(segs, tok_seg, tok_exp, bq.up, bq.up_inv)
    return segs, images


def _sorted_rows(mat: np.ndarray) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(int(v) for v in row) for row in mat]
    rows.sort()
    return tuple(rows)


def invariant_family(
    code: LongGaussCode, bq: FiniteBiquandle, initial: int
) -> tuple[tuple[int, ...], ...]:
    """Multiset of longitude maps over all colorings with the given initial
    color, canonicalized as a sorted tuple of image vectors."""
    _, images = family_matrix(code, bq, initial)
    return _sorted_rows(images)


def families_by_initial(
    code: LongGaussCode, bq: FiniteBiquandle
) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Invariant family for every initial color, from a single sweep."""
    segs, images = family_matrix(code, bq)
    out: dict[int, list] = {p: [] for p in range(bq.n)}
    for row, img in zip(segs[:, 0], images):
        out[int(row)].append(tuple(int(v) for v in img))
    return {p: tuple(sorted(rows)) for p, rows in out.items()}


def invariant_sum(
    code: LongGaussCode, bq: FiniteBiquandle, initial: int, x: int
) -> tuple[int, ...]:
    """Formal sum of longitude values at x: the sorted multiset of L(C)(x)."""
    if not 0 <= x < bq.n:
        raise ValueError(f"element {x} out of range 0..{bq.n - 1}")
    _, images = family_matrix(code, bq, initial)
    return tuple(sorted(int(v) for v in images[:, x]))


def compare_invariants(
    code1: LongGaussCode,
    code2: LongGaussCode,
    bq: FiniteBiquandle,
    initial: int,
    x: int | None = None,
) -> tuple[bool, tuple | None]:
    """Multiset equality of families (or sums when x is given).

    Returns (equal, witness); the witness is (position, left entry, right
    entry) at the first differing slot of the canonical forms, with None
    standing for an exhausted side.
    """
    if x is None:
        left = invariant_family(code1, bq, initial)
        right = invariant_family(code2, bq, initial)
    else:
        left = invariant_sum(code1, bq, initial, x)
        right = invariant_sum(code2, bq, initial, x)
    if left == right:
        return True, None
    for i in range(max(len(left), len(right))):
        lv = left[i] if i < len(left) else None
        rv = right[i] if i < len(right) else None
        if lv != rv:
            return False, (i, lv, rv)
    raise AssertionError("unequal multisets with no differing entry")
