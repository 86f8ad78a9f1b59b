"""Hot loops, in two interchangeable flavours: numba @njit and pure numpy.

The backend is picked once at import time from the BIQUANDLES_BACKEND
environment variable ("numba" or "numpy"). Unset, numba is used when
importable and numpy otherwise. Both paths return bit-identical results;
tests and benchmarks/bench_backends.py exercise them side by side via the
private ``_*_nb`` / ``_*_np`` entry points.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - mirror environment always has numba
    numba = None
    HAVE_NUMBA = False


def _select_backend() -> str:
    choice = os.environ.get("BIQUANDLES_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise ImportError("BIQUANDLES_BACKEND=numba but numba is not installed")
        return "numba"
    if choice:
        raise ValueError(
            f"unknown BIQUANDLES_BACKEND {choice!r} (expected 'numba' or 'numpy')"
        )
    return "numba" if HAVE_NUMBA else "numpy"


BACKEND = _select_backend()


def _arr(a, dtype=np.int64) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=dtype))


# ---------------------------------------------------------------------------
# Yang-Baxter triple check.
#
# The three component identities of the braid relation, written with
# up[a, b] = a^b and down[a, b] = a_b:
#   (a^b)^c        == (a^(c_b))^(b^c)
#   (a_b)_c        == (a_(c^b))_(b_c)
#   (a_b)^(c_(b^a)) == (a^c)_(b^(c_a))
# A violation is reported as the lexicographically first bad (a, b, c).
# ---------------------------------------------------------------------------


def _ybe_np(up: np.ndarray, down: np.ndarray, chunk: int = 16):
    n = up.shape[0]
    bs = np.arange(n)[None, :, None]
    cs = np.arange(n)[None, None, :]
    for a0 in range(0, n, chunk):
        a1 = min(a0 + chunk, n)
        av = np.arange(a0, a1)[:, None, None]
        e2 = up[up[av, bs], cs] != up[up[av, down[cs, bs]], up[bs, cs]]
        e3 = down[down[av, bs], cs] != down[down[av, up[cs, bs]], down[bs, cs]]
        e4 = up[down[av, bs], down[cs, up[bs, av]]] != down[up[av, cs], up[bs, down[cs, av]]]
        bad = e2 | e3 | e4
        if bad.any():
            i, j, k = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return a0 + int(i), int(j), int(k)
    return -1, -1, -1


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _ybe_nb(up, down):  # pragma: no cover - exercised via dispatch
        n = up.shape[0]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (
                        up[up[a, b], c] != up[up[a, down[c, b]], up[b, c]]
                        or down[down[a, b], c] != down[down[a, up[c, b]], down[b, c]]
                        or up[down[a, b], down[c, up[b, a]]]
                        != down[up[a, c], up[b, down[c, a]]]
                    ):
                        return a, b, c
        return -1, -1, -1


def ybe_first_violation(up, down):
    """First (a, b, c) violating the braid relation, or None if it holds."""
    up = _arr(up)
    down = _arr(down)
    if BACKEND == "numba":
        a, b, c = _ybe_nb(up, down)
    else:
        a, b, c = _ybe_np(up, down)
    if a < 0:
        return None
    return int(a), int(b), int(c)


# ---------------------------------------------------------------------------
# Coloring enumeration.
#
# A code with m passes is described by two length-m arrays:
#   tid[t]  selects the operation table for pass t (0 up, 1 down, 2 upbar,
#           3 downbar),
#   opp[t]  is the segment index holding the opposite strand's input color.
# Pass t maps segment t to segment t+1 via seg[t+1] = T[seg[t], seg[opp[t]]].
# Undetermined opposite inputs are branched over all n carrier values and
# pruned as soon as propagation reaches the guessed segment. Rows of the
# result are full segment vectors; the caller gets them in lexicographic
# order regardless of branch order.
# ---------------------------------------------------------------------------


def _enumerate_np(tables, tid, opp, n, initial):
    m = tid.shape[0]
    if initial >= 0:
        segs = np.full((1, m + 1), -1, dtype=np.int64)
        segs[0, 0] = initial
    else:
        segs = np.full((n, m + 1), -1, dtype=np.int64)
        segs[:, 0] = np.arange(n)
    for t in range(m):
        o = opp[t]
        unknown = segs[:, o] < 0
        if unknown.any():
            fixed = segs[~unknown]
            expand = np.repeat(segs[unknown], n, axis=0)
            expand[:, o] = np.tile(np.arange(n), int(unknown.sum()))
            segs = np.concatenate([fixed, expand], axis=0)
        new = tables[tid[t]][segs[:, t], segs[:, o]]
        cur = segs[:, t + 1]
        keep = (cur < 0) | (cur == new)
        segs = segs[keep]
        segs[:, t + 1] = new[keep]
    return segs


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _enumerate_nb(tables, tid, opp, n, initial):  # pragma: no cover
        m = tid.shape[0]
        if initial >= 0:
            rows = 1
            segs = np.full((1, m + 1), -1, dtype=np.int64)
            segs[0, 0] = initial
        else:
            rows = n
            segs = np.full((n, m + 1), -1, dtype=np.int64)
            for v in range(n):
                segs[v, 0] = v
        for t in range(m):
            o = opp[t]
            guessed = 0
            for r in range(rows):
                if segs[r, o] < 0:
                    guessed += 1
            if guessed > 0:
                out = np.empty((rows - guessed + guessed * n, m + 1), dtype=np.int64)
                w = 0
                for r in range(rows):
                    if segs[r, o] < 0:
                        for v in range(n):
                            out[w, :] = segs[r, :]
                            out[w, o] = v
                            w += 1
                    else:
                        out[w, :] = segs[r, :]
                        w += 1
                segs = out
                rows = w
            table = tables[tid[t]]
            w = 0
            for r in range(rows):
                new = table[segs[r, t], segs[r, o]]
                cur = segs[r, t + 1]
                if cur < 0 or cur == new:
                    if w != r:
                        segs[w, :] = segs[r, :]
                    segs[w, t + 1] = new
                    w += 1
            rows = w
        return segs[:rows, :]


def _lex_rows(segs: np.ndarray) -> np.ndarray:
    if segs.shape[0] > 1:
        order = np.lexsort(segs.T[::-1])
        segs = segs[order]
    return np.ascontiguousarray(segs)


def enumerate_segments(tables, tid, opp, n: int, initial: int = -1) -> np.ndarray:
    """All consistent segment colorings, lexicographically sorted by row.

    ``tables`` is the (4, n, n) stack [up, down, upbar, downbar]; ``initial``
    fixes segment 0 when nonnegative.
    """
    tables = _arr(tables)
    tid = _arr(tid)
    opp = _arr(opp)
    if BACKEND == "numba":
        segs = _enumerate_nb(tables, tid, opp, n, initial)
    else:
        segs = _enumerate_np(tables, tid, opp, n, initial)
    return _lex_rows(segs)


# ---------------------------------------------------------------------------
# Batch longitude evaluation: fold the per-pass up-operators over every
# carrier element, for every coloring row at once. tok_seg[t] names the
# segment whose color is the operator element of pass t; tok_exp[t] is +1
# for the operator itself and -1 for its inverse permutation.
# ---------------------------------------------------------------------------


def _longitude_np(segs, tok_seg, tok_exp, up, up_inv):
    k = segs.shape[0]
    n = up.shape[0]
    images = np.broadcast_to(np.arange(n), (k, n)).copy()
    for t in range(tok_seg.shape[0]):
        u = segs[:, tok_seg[t]][:, None]
        table = up if tok_exp[t] > 0 else up_inv
        images = table[images, u]
    return images


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _longitude_nb(segs, tok_seg, tok_exp, up, up_inv):  # pragma: no cover
        k = segs.shape[0]
        n = up.shape[0]
        m = tok_seg.shape[0]
        images = np.empty((k, n), dtype=np.int64)
        for r in range(k):
            for x in range(n):
                y = x
                for t in range(m):
                    u = segs[r, tok_seg[t]]
                    if tok_exp[t] > 0:
                        y = up[y, u]
                    else:
                        y = up_inv[y, u]
                images[r, x] = y
        return images


def longitude_images(segs, tok_seg, tok_exp, up, up_inv) -> np.ndarray:
    """(k, n) matrix whose row r is the longitude map of coloring row r."""
    segs = _arr(segs)
    tok_seg = _arr(tok_seg)
    tok_exp = _arr(tok_exp)
    up = _arr(up)
    up_inv = _arr(up_inv)
    if BACKEND == "numba":
        return _longitude_nb(segs, tok_seg, tok_exp, up, up_inv)
    return _longitude_np(segs, tok_seg, tok_exp, up, up_inv)
