"""Long virtual knot diagrams as signed Gauss codes.

A diagram is the left-to-right sequence of classical crossing passes;
virtual crossings carry labels across unchanged and are therefore not
represented at all. Segment i is the semi-arc after pass i (segment 0 is
the initial arc), so a code with m passes has m+1 segments.

Text grammar: whitespace-separated tokens ``O<k><s>`` / ``U<k><s>`` with k a
positive crossing label and s one of ``+ -``. The empty string is the
trivial long knot.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

_TOKEN_RE = re.compile(r"([OU])([0-9]+)([+-])")

OVER = "O"
UNDER = "U"

R1_KINDS = ("UO+", "OU+", "UO-", "OU-")
R2_VARIANTS = ("over+", "over-", "under+", "under-")


class GaussCodeError(ValueError):
    """Invalid Gauss code text or pass sequence; position is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Pass:
    """One visit to a classical crossing."""

    crossing: int
    role: str  # OVER or UNDER
    sign: int  # +1 or -1

    def token(self) -> str:
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Incidence:
    """Segment slots around one crossing."""

    under_in: int
    under_out: int
    over_in: int
    over_out: int


class LongGaussCode:
    """Validated, immutable pass sequence of a long virtual knot diagram."""

    def __init__(self, passes: Iterable[Pass]):
        self.passes = tuple(passes)
        self._validate()
        partner = np.empty(len(self.passes), dtype=np.int64)
        first_seen: dict[int, int] = {}
        for i, p in enumerate(self.passes):
            if p.crossing in first_seen:
                j = first_seen[p.crossing]
                partner[i] = j
                partner[j] = i
            else:
                first_seen[p.crossing] = i
        self.partner = partner
        self.partner.flags.writeable = False

    def _validate(self) -> None:
        state: dict[int, tuple[str, int, int]] = {}
        counts: dict[int, int] = {}
        for pos, p in enumerate(self.passes, start=1):
            if p.role not in (OVER, UNDER):
                raise GaussCodeError(f"bad role {p.role!r}", pos)
            if p.sign not in (1, -1):
                raise GaussCodeError(f"bad sign {p.sign!r}", pos)
            if p.crossing < 1:
                raise GaussCodeError(f"crossing label {p.crossing} must be positive", pos)
            counts[p.crossing] = counts.get(p.crossing, 0) + 1
            if counts[p.crossing] > 2:
                raise GaussCodeError(f"crossing {p.crossing} appears more than twice", pos)
            if p.crossing in state:
                role0, sign0, _ = state[p.crossing]
                if role0 == p.role:
                    raise GaussCodeError(
                        f"crossing {p.crossing} visited twice as {p.role}", pos
                    )
                if sign0 != p.sign:
                    raise GaussCodeError(f"sign mismatch at crossing {p.crossing}", pos)
            else:
                state[p.crossing] = (p.role, p.sign, pos)
        for c, cnt in counts.items():
            if cnt == 1:
                raise GaussCodeError(
                    f"crossing {c} appears only once", state[c][2]
                )

    # -- basic views --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.passes)

    def __eq__(self, other) -> bool:
        return isinstance(other, LongGaussCode) and self.passes == other.passes

    def __hash__(self) -> int:
        return hash(self.passes)

    def __repr__(self) -> str:
        return f"LongGaussCode({self.serialize()!r})"

    @property
    def segments(self) -> int:
        return len(self.passes) + 1

    @property
    def crossings(self) -> int:
        return len(self.passes) // 2

    def crossing_ids(self) -> tuple[int, ...]:
        """Crossing labels in order of first appearance."""
        seen: dict[int, None] = {}
        for p in self.passes:
            seen.setdefault(p.crossing, None)
        return tuple(seen)

    def serialize(self) -> str:
        return " ".join(p.token() for p in self.passes)

    def to_json(self) -> str:
        return json.dumps(
            {"passes": [{"c": p.crossing, "role": p.role, "sign": p.sign} for p in self.passes]}
        )

    @staticmethod
    def from_json(text: str) -> "LongGaussCode":
        data = json.loads(text)
        return LongGaussCode(
            Pass(int(d["c"]), str(d["role"]), int(d["sign"])) for d in data["passes"]
        )


def parse_gauss_code(text: str) -> LongGaussCode:
    """Parse whitespace-separated pass tokens into a validated code."""
    passes = []
    for pos, tok in enumerate(text.split(), start=1):
        m = _TOKEN_RE.fullmatch(tok)
        if m is None:
            raise GaussCodeError(f"bad token {tok!r}", pos)
        role, label, sign = m.groups()
        passes.append(Pass(int(label), role, 1 if sign == "+" else -1))
    return LongGaussCode(passes)


def reverse_orientation(code: LongGaussCode) -> LongGaussCode:
    """Traverse right to left; roles and signs are unchanged."""
    return LongGaussCode(reversed(code.passes))


def incidence(code: LongGaussCode) -> dict[int, Incidence]:
    """Per-crossing segment slots, keyed by crossing id in first-appearance
    order. The pass at 1-based position i consumes segment i-1 and produces
    segment i."""
    positions: dict[int, dict[str, int]] = {}
    for i, p in enumerate(code.passes, start=1):
        positions.setdefault(p.crossing, {})[p.role] = i
    out = {}
    for c in code.crossing_ids():
        i = positions[c][UNDER]
        j = positions[c][OVER]
        out[c] = Incidence(under_in=i - 1, under_out=i, over_in=j - 1, over_out=j)
    return out


def fresh_crossing_id(code: LongGaussCode) -> int:
    return max((p.crossing for p in code.passes), default=0) + 1


# ---------------------------------------------------------------------------
# Reidemeister move generators. Insertions take segment positions in the
# input code; deletions take 0-based pass indices in the current code, so
# delete(insert(D, ...)) with matching arguments is the identity.
# ---------------------------------------------------------------------------


def r1_insert(
    code: LongGaussCode, position: int, kind: str, crossing_id: int | None = None
) -> LongGaussCode:
    """Insert a kink: two adjacent passes of one fresh crossing."""
    if kind not in R1_KINDS:
        raise ValueError(f"kink kind must be one of {R1_KINDS}, got {kind!r}")
    if not 0 <= position <= len(code):
        raise ValueError(f"position {position} out of range 0..{len(code)}")
    c = fresh_crossing_id(code) if crossing_id is None else crossing_id
    sign = 1 if kind[2] == "+" else -1
    pair = (Pass(c, kind[0], sign), Pass(c, kind[1], sign))
    passes = code.passes[:position] + pair + code.passes[position:]
    return LongGaussCode(passes)


def r1_delete(code: LongGaussCode, position: int) -> LongGaussCode:
    """Remove the adjacent same-crossing pair starting at pass ``position``."""
    ps = code.passes
    if not (0 <= position < len(ps) - 1 and ps[position].crossing == ps[position + 1].crossing):
        raise GaussCodeError(f"no adjacent kink pair at pass index {position}")
    return LongGaussCode(ps[:position] + ps[position + 2 :])


def r1_deletable_positions(code: LongGaussCode) -> list[int]:
    ps = code.passes
    return [i for i in range(len(ps) - 1) if ps[i].crossing == ps[i + 1].crossing]


def r2_insert(
    code: LongGaussCode,
    pos_a: int,
    pos_b: int,
    variant: str,
    crossing_ids: tuple[int, int] | None = None,
) -> LongGaussCode:
    """Insert a cancelling crossing pair: (c, c') at pos_a, (c', c) at pos_b.

    One strand piece is over at both crossings and the other under at both;
    the two crossings carry opposite signs. ``variant`` picks the role of
    the first piece and the sign of crossing c: over+/over-/under+/under-.
    """
    if variant not in R2_VARIANTS:
        raise ValueError(f"variant must be one of {R2_VARIANTS}, got {variant!r}")
    if not 0 <= pos_a <= pos_b <= len(code):
        raise ValueError(
            f"need 0 <= pos_a <= pos_b <= {len(code)}, got ({pos_a}, {pos_b})"
        )
    if crossing_ids is None:
        c = fresh_crossing_id(code)
        cp = c + 1
    else:
        c, cp = crossing_ids
    role_a = OVER if variant.startswith("over") else UNDER
    role_b = UNDER if role_a == OVER else OVER
    sign = 1 if variant.endswith("+") else -1
    pair_a = (Pass(c, role_a, sign), Pass(cp, role_a, -sign))
    pair_b = (Pass(cp, role_b, -sign), Pass(c, role_b, sign))
    ps = code.passes
    passes = ps[:pos_a] + pair_a + ps[pos_a:pos_b] + pair_b + ps[pos_b:]
    return LongGaussCode(passes)


def r2_delete(code: LongGaussCode, pos_a: int, pos_b: int) -> LongGaussCode:
    """Remove an R2 pattern: passes (c, c') at pos_a and (c', c) at pos_b."""
    ps = code.passes
    ok = (
        0 <= pos_a < pos_a + 1 < pos_b < pos_b + 1 < len(ps)
        and ps[pos_a].crossing != ps[pos_a + 1].crossing
        and ps[pos_a].role == ps[pos_a + 1].role
        and ps[pos_a].sign == -ps[pos_a + 1].sign
        and ps[pos_b].crossing == ps[pos_a + 1].crossing
        and ps[pos_b + 1].crossing == ps[pos_a].crossing
        and ps[pos_b].role == ps[pos_b + 1].role
        and ps[pos_b].role != ps[pos_a].role
    )
    if not ok:
        raise GaussCodeError(f"no R2 pattern at pass indices ({pos_a}, {pos_b})")
    drop = {pos_a, pos_a + 1, pos_b, pos_b + 1}
    return LongGaussCode(p for i, p in enumerate(ps) if i not in drop)


def r2_deletable_pairs(code: LongGaussCode) -> list[tuple[int, int]]:
    ps = code.passes
    out = []
    for i in range(len(ps) - 1):
        if (
            ps[i].crossing != ps[i + 1].crossing
            and ps[i].role == ps[i + 1].role
            and ps[i].sign == -ps[i + 1].sign
        ):
            j = int(code.partner[i + 1])
            if j > i + 1 and j + 1 < len(ps) and int(code.partner[i]) == j + 1:
                if ps[j].role == ps[j + 1].role and ps[j].role != ps[i].role:
                    out.append((i, j))
    return out


def r3_fixture_pairs() -> list[tuple[LongGaussCode, LongGaussCode]]:
    """Golden code pairs related by the all-positive braid-like third move.

    Three strand pieces A, B, C meet in a triangle of positive crossings
    1 = A/B, 2 = A/C, 3 = B/C; the move swaps the order of the two passes
    along each piece. The long knot visits the pieces in several orders
    (virtual crossings supply the routing), and two pairs are embedded in
    larger codes with an extra kink.
    """
    piece_pairs = {
        "A": ("O1+ O2+", "O2+ O1+"),
        "B": ("U1+ O3+", "O3+ U1+"),
        "C": ("U2+ U3+", "U3+ U2+"),
    }
    pairs = []
    for order in ("ABC", "BAC", "ACB", "CAB"):
        left = " ".join(piece_pairs[x][0] for x in order)
        right = " ".join(piece_pairs[x][1] for x in order)
        pairs.append((parse_gauss_code(left), parse_gauss_code(right)))
    base_l, base_r = pairs[0]
    pairs.append(
        (
            r1_insert(base_l, 0, "UO+", crossing_id=4),
            r1_insert(base_r, 0, "UO+", crossing_id=4),
        )
    )
    pairs.append(
        (
            r1_insert(base_l, len(base_l), "OU-", crossing_id=4),
            r1_insert(base_r, len(base_r), "OU-", crossing_id=4),
        )
    )
    return pairs
