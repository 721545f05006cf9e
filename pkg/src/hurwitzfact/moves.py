"""Hurwitz moves on factorizations into conjugates of bwb, and the
normalization onto canonical representatives.

A right move at position i (1-based) replaces (g_i, g_{i+1}) by
(g_{i+1}, g_{i+1}^-1 g_i g_{i+1}); the left move is its inverse.  Both
preserve the product and the entry count.

Every factorization can be driven, by moves, to a form that is either
well jointed outright, or an all-short well-jointed prefix followed by
r > 0 copies of the badly-joining pair (wB, bwb).  ``normalize`` realizes
that descent and records the move sequence as a replayable witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .conjugates import (
    SHORTS,
    Conjugate,
    bad_predecessor,
    bad_successor,
    is_well_jointed,
    joins_well,
    recognize,
)
from .words import IDENTITY, Word


class Factorization:
    """An ordered tuple of conjugates of bwb with its cached product."""

    __slots__ = ("entries", "product")

    def __init__(self, entries):
        entries = tuple(entries)
        prod = IDENTITY
        for e in entries:
            prod = prod * e.word
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "product", prod)

    def __setattr__(self, name, value):
        raise AttributeError("Factorization is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Factorization) and self.words() == other.words()

    def __hash__(self) -> int:
        return hash(self.words())

    def words(self) -> tuple:
        return tuple(e.word for e in self.entries)

    def sort_key(self) -> tuple:
        return tuple(e.word.sort_key() for e in self.entries)

    def is_well_jointed(self) -> bool:
        return is_well_jointed(self.entries)

    def all_short(self) -> bool:
        return all(e.is_short for e in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def from_words(ws) -> Factorization:
    """Build a factorization from words, rejecting non-conjugates by index."""
    entries = []
    for i, w in enumerate(ws):
        c = recognize(w)
        if c is None:
            raise ValueError(f"entry {i + 1} ({w}) is not a conjugate of bwb")
        entries.append(c)
    return Factorization(entries)


def _conjugated(x: Conjugate, by: Conjugate, left: bool) -> Conjugate:
    w = by.word * x.word * by.word.inverse() if left else by.word.inverse() * x.word * by.word
    c = recognize(w)
    assert c is not None  # conjugates of a conjugate stay in the class
    return c


def move_right(fac: Factorization, i: int) -> Factorization:
    """H_i: (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^-1 g_i g_{i+1}, ..)."""
    n = len(fac)
    if not 1 <= i <= n - 1:
        raise IndexError(f"position {i} out of range for {n} entries")
    e = list(fac.entries)
    e[i - 1], e[i] = e[i], _conjugated(e[i - 1], e[i], left=False)
    return Factorization(e)


def move_left(fac: Factorization, i: int) -> Factorization:
    """H_i^-1: (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^-1, g_i, ..)."""
    n = len(fac)
    if not 1 <= i <= n - 1:
        raise IndexError(f"position {i} out of range for {n} entries")
    e = list(fac.entries)
    e[i - 1], e[i] = _conjugated(e[i], e[i - 1], left=True), e[i - 1]
    return Factorization(e)


def apply_moves(fac: Factorization, moves) -> Factorization:
    """Replay a move witness: each move is ('R', i) or ('L', i)."""
    for kind, i in moves:
        fac = move_right(fac, i) if kind == "R" else move_left(fac, i)
    return fac


def excess(fac: Factorization) -> int:
    """Total length beyond short size: sum of max(0, len(g) - 3)."""
    return sum(max(0, len(e) - 3) for e in fac.entries)


def _pair_excess(g: Conjugate, h: Conjugate) -> int:
    return max(0, len(g) - 3) + max(0, len(h) - 3)


def shrink_bad_pair(fac: Factorization, i: int) -> tuple:
    """One move at position i that strictly shrinks a badly-joining pair
    with a long member.  Returns (new factorization, move).

    Tries the right move first, then the left.  If neither shrinks the
    pair the class invariant is broken somewhere upstream, so this fails
    loudly rather than looping.
    """
    g, h = fac[i - 1], fac[i]
    if joins_well(g, h):
        raise ValueError(f"pair at position {i} joins well")
    if g.is_short and h.is_short:
        raise ValueError(f"pair at position {i} is short-short; nothing to shrink")
    before = _pair_excess(g, h)
    right = move_right(fac, i)
    if _pair_excess(right[i - 1], right[i]) < before:
        return right, ("R", i)
    left = move_left(fac, i)
    if _pair_excess(left[i - 1], left[i]) < before:
        return left, ("L", i)
    raise RuntimeError(
        f"neither move shrinks the bad pair ({g}, {h}) at position {i}; "
        "this contradicts the length-descent property of bad pairs"
    )


@dataclass(frozen=True)
class CanonicalForm:
    """Well-jointed prefix plus r trailing copies of (wB, bwb).

    When r > 0 every prefix entry is short.  ``moves`` replays from the
    input factorization to ``realized()``; ``phases`` tags each move as
    "shrink" (a bad pair with a long member got strictly shorter),
    "migrate" (a bad short pair walked toward a long) or "endgame"
    (all-short rotation).
    """

    prefix: Factorization
    pairs: int
    moves: tuple = ()
    phases: tuple = ()

    def realized(self) -> Factorization:
        return Factorization(self.prefix.entries + (SHORTS[0], SHORTS[1]) * self.pairs)


def _bad_positions(entries, cut: int) -> list:
    return [
        i for i in range(cut - 1) if not joins_well(entries[i], entries[i + 1])
    ]


class _Normalizer:
    def __init__(self, fac: Factorization):
        self.state = fac
        self.moves: list = []
        self.phases: list = []

    def right(self, i: int, phase: str) -> None:
        self.state = move_right(self.state, i)
        self.moves.append(("R", i))
        self.phases.append(phase)

    def record(self, new_state: Factorization, move, phase: str) -> None:
        self.state = new_state
        self.moves.append(move)
        self.phases.append(phase)

    def rotate_until(self, i: int, want: Word, second: bool, phase: str) -> None:
        # 0-based pair (i, i+1); bad short pairs form a 3-cycle under right
        # moves, so at most two rotations are needed
        for _ in range(3):
            e = self.state.entries
            probe = e[i + 1] if second else e[i]
            if probe.word == want:
                return
            self.right(i + 1, phase)
        raise AssertionError("bad short pair left its 3-cycle")

    def run(self) -> CanonicalForm:
        cut = len(self.state)
        while True:
            e = self.state.entries
            bad = _bad_positions(e, cut)
            if not bad:
                prefix = Factorization(e[:cut])
                pairs = (len(e) - cut) // 2
                assert pairs == 0 or prefix.all_short()
                return CanonicalForm(
                    prefix, pairs, tuple(self.moves), tuple(self.phases)
                )

            # phase 1: shrink any bad pair with a long member (rightmost first)
            long_bad = [i for i in bad if not (e[i].is_short and e[i + 1].is_short)]
            if long_bad:
                i = long_bad[-1]
                new_state, move = shrink_bad_pair(self.state, i + 1)
                self.record(new_state, move, "shrink")
                continue

            longs = [i for i in range(cut) if not e[i].is_short]
            if longs:
                # all bad pairs are short-short but longs remain: walk the
                # nearest bad pair up against the rightmost long so phase 1
                # can fire on it
                t = longs[-1]
                right_side = [i for i in bad if i > t]
                if right_side:
                    i = right_side[0]
                    # make the pair's first entry join badly after e[i-1]
                    self.rotate_until(
                        i, bad_successor(e[i - 1]).word, second=False, phase="migrate"
                    )
                else:
                    i = bad[-1]  # entirely left of t, i.e. i + 1 < t
                    self.rotate_until(
                        i, bad_predecessor(e[i + 2]).word, second=True, phase="migrate"
                    )
                continue

            # all-short endgame: drive the rightmost bad pair to the end of
            # the active region, rotate it to (wB, bwb), and freeze it
            i = bad[-1]
            if i == cut - 2:
                self.rotate_until(i, SHORTS[1].word, second=True, phase="endgame")
                assert self.state.entries[i].word == SHORTS[0].word
                cut -= 2
            else:
                self.rotate_until(
                    i, bad_predecessor(e[i + 2]).word, second=True, phase="endgame"
                )


def normalize(fac: Factorization) -> CanonicalForm:
    """Drive fac to its canonical shape by Hurwitz moves.

    The returned form has an identical product and entry count, is
    reproducible from the move witness, and satisfies: pairs > 0 implies
    the prefix is all-short.
    """
    return _Normalizer(fac).run()


def orbit(fac: Factorization, max_len: int, max_nodes: int) -> tuple:
    """Bounded breadth-first closure of fac under all moves.

    States containing an entry longer than max_len are discarded.  Returns
    (frozenset of factorizations, truncated flag); the flag is set when the
    node budget stopped the search before the frontier emptied.
    """
    if any(len(e) > max_len for e in fac.entries):
        return frozenset(), False
    seen = {fac}
    queue = deque([fac])
    truncated = False
    while queue:
        if len(seen) >= max_nodes:
            truncated = True
            break
        cur = queue.popleft()
        for i in range(1, len(cur)):
            for nxt in (move_right(cur, i), move_left(cur, i)):
                if any(len(e) > max_len for e in nxt.entries):
                    continue
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen), truncated
