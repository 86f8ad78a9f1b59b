"""Finite switches, biracks, and biquandles as dense operation tables.

A switch on a carrier {0..n-1} is the pair map S(a, b) = (down[b, a], up[a, b])
when S is a bijection of the n^2 pairs and satisfies the braid relation.
Table orientation throughout: the first index is the element acted on, the
second the actor, so up[a, b] = a^b and down[a, b] = a_b.

Verification is never skipped: every constructor classifies its tables as
switch / birack / biquandle by running the axiom checks, and the named
constructors (Wada, Alexander) refuse to hand back anything weaker than a
biquandle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .groups import FiniteGroup

LEVELS = ("switch", "birack", "biquandle")


class TableError(ValueError):
    """Malformed input: wrong shape, out-of-range entries, bad file syntax."""


class AxiomError(ValueError):
    """Structurally well-formed tables that fail a required axiom."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of one axiom check; witness pins the first failure found."""

    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _as_tables(up, down) -> tuple[np.ndarray, np.ndarray]:
    up = np.asarray(up)
    down = np.asarray(down)
    if up.ndim != 2 or up.shape[0] != up.shape[1]:
        raise TableError(f"up table must be square, got shape {up.shape}")
    if down.shape != up.shape:
        raise TableError(f"down table shape {down.shape} != up table shape {up.shape}")
    if up.shape[0] == 0:
        raise TableError("empty carrier")
    if not np.issubdtype(up.dtype, np.integer) or not np.issubdtype(down.dtype, np.integer):
        raise TableError("table entries must be integers")
    n = up.shape[0]
    for name, t in (("up", up), ("down", down)):
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise TableError(
                f"{name}[{bad[0]}, {bad[1]}] = {int(t[bad[0], bad[1]])} out of range 0..{n - 1}"
            )
    return (
        np.ascontiguousarray(up, dtype=np.int64),
        np.ascontiguousarray(down, dtype=np.int64),
    )


def _pair_codes(up: np.ndarray, down: np.ndarray) -> np.ndarray:
    # S(a, b) encoded as first * n + second, indexed [a, b]
    n = up.shape[0]
    return down.T * n + up


def _first_pair_collision(codes: np.ndarray) -> tuple[int, int]:
    """Lexicographically first (a, b) whose S-image repeats an earlier one."""
    flat = codes.ravel()
    seen = np.zeros(flat.shape[0], dtype=bool)
    for i, c in enumerate(flat):
        if seen[c]:
            return divmod(i, codes.shape[0])
        seen[c] = True
    raise AssertionError("no collision in a non-bijective pair map")


def verify_switch(up, down) -> Verdict:
    """Pair-map bijectivity plus the braid relation over all n^3 triples."""
    up, down = _as_tables(up, down)
    codes = _pair_codes(up, down)
    n = up.shape[0]
    if np.unique(codes).size != n * n:
        a, b = _first_pair_collision(codes)
        return Verdict(False, "pair map S is not a bijection", ("pair", (int(a), int(b))))
    bad = _kernels.ybe_first_violation(up, down)
    if bad is not None:
        return Verdict(False, "braid relation fails", ("triple", bad))
    return Verdict(True)


def _column_permutation_mask(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    return (np.sort(table, axis=0) == np.arange(n)[:, None]).all(axis=0)


def verify_birack(up, down) -> Verdict:
    """Every action map x -> up[x, a] and x -> down[x, a] is a bijection."""
    up, down = _as_tables(up, down)
    for name, table in (("up", up), ("down", down)):
        ok = _column_permutation_mask(table)
        if not ok.all():
            a = int(np.argmin(ok))
            return Verdict(False, f"{name}-action for actor {a} is not a bijection", (name, a))
    return Verdict(True)


def _column_inverses(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    inv = np.empty_like(table)
    inv[table, np.arange(n)[None, :]] = np.arange(n)[:, None]
    return inv


def verify_biquandle(up, down) -> Verdict:
    """The two diagonal identities on top of the birack axioms.

    With d the solution of d_a = a (so d = down_inv[a, a]):
      B1:  up_inv[a, a] == down[a, d]
      B2:  d == up[a, d]
    Assumes the birack check already passed.
    """
    up, down = _as_tables(up, down)
    n = up.shape[0]
    up_inv = _column_inverses(up)
    down_inv = _column_inverses(down)
    rng = np.arange(n)
    d = down_inv[rng, rng]
    b1 = up_inv[rng, rng] == down[rng, d]
    b2 = d == up[rng, d]
    if not b1.all():
        a = int(np.argmin(b1))
        return Verdict(False, f"diagonal identity B1 fails at element {a}", ("B1", a))
    if not b2.all():
        a = int(np.argmin(b2))
        return Verdict(False, f"diagonal identity B2 fails at element {a}", ("B2", a))
    return Verdict(True)


def derive_bar_tables(up, down) -> tuple[np.ndarray, np.ndarray]:
    """Invert the pair map S explicitly and read off the bar operations.

    For S^-1(p, q) = (x, y): upbar[q, p] = x and downbar[p, q] = y. Raises
    AxiomError when S is not a bijection.
    """
    up, down = _as_tables(up, down)
    n = up.shape[0]
    codes = _pair_codes(up, down)
    if np.unique(codes).size != n * n:
        raise AxiomError("pair map S is not a bijection; bar operations undefined")
    first = np.empty((n, n), dtype=np.int64)  # x indexed by image pair (p, q)
    second = np.empty((n, n), dtype=np.int64)
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    p = down.T  # S first component
    q = up  # S second component
    first[p, q] = np.broadcast_to(a, (n, n))
    second[p, q] = np.broadcast_to(b, (n, n))
    upbar = first.T.copy()
    downbar = second
    return upbar, downbar


def classify_tables(up, down) -> str:
    """Highest of switch/birack/biquandle the tables satisfy.

    Raises AxiomError (with the witness in the message) when the tables are
    not even a switch.
    """
    sw = verify_switch(up, down)
    if not sw:
        raise AxiomError(f"not a switch: {sw.reason} at {sw.witness}")
    if not verify_birack(up, down):
        return "switch"
    if not verify_biquandle(up, down):
        return "birack"
    return "biquandle"


class FiniteBiquandle:
    """A verified switch (possibly birack or biquandle) on {0..n-1}.

    All tables are int64 and frozen after construction. ``level`` records
    the highest axiom tier that holds. Bar tables exist for every switch;
    the row-inverse caches (up_inv and friends) exist from birack up.
    """

    def __init__(self, up, down, *, element_names=None, group: FiniteGroup | None = None):
        up, down = _as_tables(up, down)
        self.n = int(up.shape[0])
        self.level = classify_tables(up, down)
        self.up = up
        self.down = down
        self.upbar, self.downbar = derive_bar_tables(up, down)
        if self.level in ("birack", "biquandle"):
            self.up_inv = _column_inverses(up)
            self.down_inv = _column_inverses(down)
            self.upbar_inv = _column_inverses(self.upbar)
            self.downbar_inv = _column_inverses(self.downbar)
            self._op_stack = np.ascontiguousarray(
                np.stack([self.up, self.down, self.upbar, self.downbar])
            )
        else:
            self.up_inv = self.down_inv = None
            self.upbar_inv = self.downbar_inv = None
            self._op_stack = None
        if element_names is None:
            element_names = tuple(str(i) for i in range(self.n))
        else:
            element_names = tuple(str(s) for s in element_names)
            if len(element_names) != self.n:
                raise TableError("element_names length does not match carrier size")
        self.element_names = element_names
        self.group = group
        for t in (
            self.up,
            self.down,
            self.upbar,
            self.downbar,
            self.up_inv,
            self.down_inv,
            self.upbar_inv,
            self.downbar_inv,
            self._op_stack,
        ):
            if t is not None:
                t.flags.writeable = False

    def __repr__(self) -> str:
        return f"FiniteBiquandle(n={self.n}, level={self.level})"

    def name(self, i: int) -> str:
        return self.element_names[i]

    def resolve(self, name: str) -> int:
        """Element index for a display name."""
        squeezed = "".join(str(name).split())
        for cand in (str(name), squeezed):
            try:
                return self.element_names.index(cand)
            except ValueError:
                pass
        if self.group is not None:
            return self.group.resolve(name)
        raise ValueError(f"unknown element name {name!r}")

    def op_stack(self) -> np.ndarray:
        """(4, n, n) stack [up, down, upbar, downbar]; requires birack."""
        if self._op_stack is None:
            raise AxiomError(f"operation requires at least a birack, have {self.level}")
        return self._op_stack


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def wada_tables(group: FiniteGroup) -> tuple[np.ndarray, np.ndarray]:
    """Raw Wada tables over a group: a^b = a*b*b, b_a = a*inv(b)*inv(a)."""
    mul, inv = group.mul, group.inv
    n = group.order
    rng = np.arange(n)
    up = mul[:, mul[rng, rng]]  # up[g, h] = g * (h*h)
    t = mul[mul[rng[:, None], inv[None, :]], inv[:, None]]  # t[g, h] = g*h^-1*g^-1
    down = t.T
    return up, down


def wada_biquandle(group: FiniteGroup) -> FiniteBiquandle:
    """The Wada switch of a finite group; always a biquandle."""
    up, down = wada_tables(group)
    bq = FiniteBiquandle(up, down, element_names=group.names, group=group)
    if bq.level != "biquandle":
        raise RuntimeError(
            f"internal inconsistency: Wada tables classified as {bq.level}"
        )
    return bq


def alexander_tables(n: int, lam: int, mu: int) -> tuple[np.ndarray, np.ndarray]:
    """Raw Alexander tables on Z/n: a^b = lam*a + (1-mu*lam)*b, a_b = mu*a."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    for label, value in (("lambda", lam), ("mu", mu)):
        g = math.gcd(value % n, n)
        if g != 1:
            raise ValueError(f"{label}={value} not invertible mod {n} (gcd {g})")
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    up = (lam * a + (1 - mu * lam) * b) % n
    down = np.broadcast_to((mu * np.arange(n)) % n, (n, n)).T.copy()  # a_b = mu*a
    return up, down


def alexander_biquandle(n: int, lam: int, mu: int) -> FiniteBiquandle:
    """The Alexander switch on Z/n; lam and mu must be units mod n."""
    up, down = alexander_tables(n, lam, mu)
    bq = FiniteBiquandle(up, down)
    if bq.level != "biquandle":
        raise RuntimeError(
            f"internal inconsistency: Alexander tables classified as {bq.level}"
        )
    return bq


def verify_rack(table) -> Verdict:
    """Rack axioms for a binary operation table t[a, b] = a*b.

    Right actions x -> x*b must be bijections and the operation must be
    right self-distributive: (a*b)*c == (a*c)*(b*c).
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise TableError(f"rack table must be square and nonempty, got {t.shape}")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer) or t.min() < 0 or t.max() >= n:
        raise TableError("rack table entries out of range")
    t = t.astype(np.int64)
    ok = _column_permutation_mask(t)
    if not ok.all():
        b = int(np.argmin(ok))
        return Verdict(False, f"right action of {b} is not a bijection", ("action", b))
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    bad = t[t[a, b], c] != t[t[a, c], t[b, c]]
    if bad.any():
        i, j, k = np.unravel_index(int(np.argmax(bad)), bad.shape)
        return Verdict(
            False,
            "self-distributivity fails",
            ("distributivity", (int(i), int(j), int(k))),
        )
    return Verdict(True)


def rack_switch(rack_table, *, element_names=None) -> FiniteBiquandle:
    """Switch S(a, b) = (b, a*b) of a rack; biquandle exactly for quandles."""
    verdict = verify_rack(rack_table)
    if not verdict:
        raise AxiomError(f"not a rack: {verdict.reason} at {verdict.witness}")
    t = np.asarray(rack_table, dtype=np.int64)
    n = t.shape[0]
    up = t
    down = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()  # a_b = a
    return FiniteBiquandle(up, down, element_names=element_names)


def from_tables(up, down, *, element_names=None) -> FiniteBiquandle:
    """Wrap raw tables, classifying their level; must be at least a switch."""
    return FiniteBiquandle(up, down, element_names=element_names)


# ---------------------------------------------------------------------------
# Table file format (text, UTF-8, LF):
#   biquandle v1
#   n=<int>
#   up:
#   <n rows of n space-separated indices>
#   down:
#   <n rows>
#   names:            (optional)
#   <index> <display-name>   (n lines)
# ---------------------------------------------------------------------------

MAGIC = "biquandle v1"


def write_table_file(bq: FiniteBiquandle, path) -> None:
    lines = [MAGIC, f"n={bq.n}", "up:"]
    lines += [" ".join(str(int(v)) for v in row) for row in bq.up]
    lines.append("down:")
    lines += [" ".join(str(int(v)) for v in row) for row in bq.down]
    if any(name != str(i) for i, name in enumerate(bq.element_names)):
        lines.append("names:")
        lines += [f"{i} {name}" for i, name in enumerate(bq.element_names)]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_matrix(lines, start: int, n: int, label: str) -> tuple[np.ndarray, int]:
    rows = []
    for r in range(n):
        ln = start + r
        if ln >= len(lines):
            raise TableError(f"line {ln + 1}: expected row {r} of {label}, got end of file")
        toks = lines[ln].split()
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise TableError(f"line {ln + 1}: non-integer entry in {label}") from None
        if len(row) != n:
            raise TableError(f"line {ln + 1}: expected {n} entries in {label} row, got {len(row)}")
        for v in row:
            if not 0 <= v < n:
                raise TableError(f"line {ln + 1}: entry {v} out of range 0..{n - 1}")
        rows.append(row)
    return np.array(rows, dtype=np.int64), start + n


def read_table_file(path) -> tuple[np.ndarray, np.ndarray, tuple[str, ...] | None]:
    """Raw (up, down, names) from a table file; no axiom checking."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if not lines or lines[0].strip() != MAGIC:
        raise TableError(f"line 1: expected {MAGIC!r} header")
    if len(lines) < 2 or not lines[1].startswith("n="):
        raise TableError("line 2: expected n=<int>")
    try:
        n = int(lines[1][2:])
    except ValueError:
        raise TableError("line 2: expected n=<int>") from None
    if n < 1:
        raise TableError("line 2: carrier size must be positive")
    pos = 2
    if pos >= len(lines) or lines[pos].strip() != "up:":
        raise TableError(f"line {pos + 1}: expected 'up:'")
    up, pos = _parse_matrix(lines, pos + 1, n, "up")
    if pos >= len(lines) or lines[pos].strip() != "down:":
        raise TableError(f"line {pos + 1}: expected 'down:'")
    down, pos = _parse_matrix(lines, pos + 1, n, "down")
    names = None
    if pos < len(lines) and lines[pos].strip() == "names:":
        pos += 1
        named = [None] * n
        for r in range(n):
            ln = pos + r
            if ln >= len(lines):
                raise TableError(f"line {ln + 1}: expected name entry, got end of file")
            parts = lines[ln].split(maxsplit=1)
            if len(parts) != 2:
                raise TableError(f"line {ln + 1}: expected '<index> <name>'")
            try:
                idx = int(parts[0])
            except ValueError:
                raise TableError(f"line {ln + 1}: bad name index {parts[0]!r}") from None
            if not 0 <= idx < n or named[idx] is not None:
                raise TableError(f"line {ln + 1}: bad or duplicate name index {idx}")
            named[idx] = parts[1]
        names = tuple(named)
        pos += n
    for ln in range(pos, len(lines)):
        if lines[ln].strip():
            raise TableError(f"line {ln + 1}: trailing garbage {lines[ln]!r}")
    return up, down, names


def load_biquandle(path) -> FiniteBiquandle:
    up, down, names = read_table_file(path)
    return FiniteBiquandle(up, down, element_names=names)
