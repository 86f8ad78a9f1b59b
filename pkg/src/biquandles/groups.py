"""Finite groups as dense index tables, plus permutation utilities.

Group elements are 0-based indices into a fixed element list; all structure
lives in a multiplication table and an inverse table, both checked
exhaustively at construction. Permutations are tuples in one-line notation
on points 0..k-1.

Composition convention, global and pinned by a golden test: products read
left to right, ``mul(p, q)`` applies p first and q second, so as functions
(p * q)(x) = q(p(x)). Cycle notation in displayed output is 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

Perm = tuple[int, ...]

MAX_SYMMETRIC_POINTS = 7  # 5040^2 table entries; anything larger is absurd here


def compose(first: Perm, then: Perm) -> Perm:
    """Apply ``first``, then ``then``: x -> then[first[x]]."""
    return tuple(then[x] for x in first)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def cycle_string(p: Perm) -> str:
    """Canonical 1-based cycle notation: "(1,2,3)", identity is "()".

    Cycles start at their smallest point and are listed by smallest point;
    fixed points are omitted.
    """
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) if parts else "()"


def parse_cycles(text: str, k: int) -> Perm:
    """Parse 1-based cycle notation like "(1,2)(3,4)" into one-line form.

    Whitespace is ignored; "()" and "e" denote the identity.
    """
    s = "".join(text.split())
    if s in ("()", "e", ""):
        return tuple(range(k))
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    images = list(range(k))
    touched = set()
    for chunk in s[1:-1].split(")("):
        if not chunk:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            pts = [int(tok) - 1 for tok in chunk.split(",")]
        except ValueError:
            raise ValueError(f"bad cycle notation: {text!r}") from None
        if any(not 0 <= x < k for x in pts):
            raise ValueError(f"point out of range 1..{k} in {text!r}")
        if len(set(pts)) != len(pts) or touched & set(pts):
            raise ValueError(f"repeated point in {text!r}")
        touched |= set(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def _check_group_tables(mul: np.ndarray, inv: np.ndarray, identity: int) -> None:
    n = mul.shape[0]
    if mul.shape != (n, n) or inv.shape != (n,):
        raise ValueError("group tables have inconsistent shapes")
    if mul.min() < 0 or mul.max() >= n or inv.min() < 0 or inv.max() >= n:
        raise ValueError("group table entry out of range")
    rng = np.arange(n)
    if not (np.array_equal(mul[identity], rng) and np.array_equal(mul[:, identity], rng)):
        raise ValueError(f"index {identity} is not a two-sided identity")
    if not (
        np.array_equal(mul[rng, inv], np.full(n, identity))
        and np.array_equal(mul[inv, rng], np.full(n, identity))
    ):
        raise ValueError("inv is not a two-sided inverse table")
    # exhaustive associativity, chunked over the first factor to bound memory
    b = rng[None, :, None]
    c = rng[None, None, :]
    for a0 in range(0, n, 16):
        a = np.arange(a0, min(a0 + 16, n))[:, None, None]
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise ValueError("multiplication table is not associative")


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable table-backed group; elements are indices 0..order-1."""

    mul: np.ndarray
    inv: np.ndarray
    identity: int
    names: tuple[str, ...]
    perms: tuple[Perm, ...] | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        mul = np.ascontiguousarray(np.asarray(self.mul, dtype=np.int64))
        inv = np.ascontiguousarray(np.asarray(self.inv, dtype=np.int64))
        _check_group_tables(mul, inv, self.identity)
        if len(self.names) != mul.shape[0]:
            raise ValueError("names length does not match group order")
        mul.flags.writeable = False
        inv.flags.writeable = False
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)
        if self.perms is not None:
            self._index.update({p: i for i, p in enumerate(self.perms)})

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    def product(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def resolve(self, name: str) -> int:
        """Element index for a display name; cycle notation is normalized."""
        squeezed = "".join(name.split())
        for cand in (name, squeezed):
            try:
                return self.names.index(cand)
            except ValueError:
                pass
        if self.perms is not None:
            k = len(self.perms[0])
            p = parse_cycles(name, k)
            if p in self._index:
                return self._index[p]
        raise ValueError(f"unknown group element {name!r}")


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n, written additively; element i is the residue i."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    rng = np.arange(n)
    mul = (rng[:, None] + rng[None, :]) % n
    inv = (-rng) % n
    return FiniteGroup(mul, inv, 0, tuple(str(i) for i in range(n)))


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on points 0..k-1; elements in lexicographic one-line order.

    Index 0 is the identity. Products follow the global left-to-right
    convention, so mul[i, j] is "p_i then p_j".
    """
    if not 1 <= k <= MAX_SYMMETRIC_POINTS:
        raise ValueError(f"symmetric group size must be 1..{MAX_SYMMETRIC_POINTS}")
    perms = [tuple(p) for p in permutations(range(k))]
    index = {p: i for i, p in enumerate(perms)}
    n = math.factorial(k)
    mul = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[compose(p, q)]
    inv = np.array([index[invert(p)] for p in perms], dtype=np.int64)
    names = tuple(cycle_string(p) for p in perms)
    return FiniteGroup(mul, inv, 0, names, perms=tuple(perms))
