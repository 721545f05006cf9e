"""Conjugates of the word bwb, their taxonomy, and the join predicate.

Every conjugate of bwb has reduced expression either

  * one of the three shorts  wB, bwb, Bw  (cyclic conjugations by powers
    of b), or
  * Q^-1 (bwb) Q for a unique reduced Q beginning with 'w', giving length
    2*len(Q) + 3 ("long" conjugates).

The conjugator convention throughout is g = q^-1 (bwb) q.  For the shorts
the minimal conjugators are q = b, 1, B respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import B1, B2, IDENTITY, W, Word, _from_reduced

CORE = Word("bwb")  # the unique length-3 conjugate; every entry is conjugate to it

_LEFT_SHORT = (Word("w"), Word("bw"), Word("Bw"))
_SHORT_WORDS = (Word("wB"), Word("bwb"), Word("Bw"))
_SHORT_Q = (B1, IDENTITY, B2)


@dataclass(frozen=True)
class Conjugate:
    """A word known to be conjugate to bwb.

    ``q`` is the minimal conjugator: ``word == q^-1 * bwb * q``, with
    ``q`` in {1, b, B} for the shorts and beginning with 'w' otherwise.
    """

    word: Word
    q: Word

    @property
    def is_short(self) -> bool:
        return len(self.word) <= 3

    @property
    def short_index(self) -> int:
        """0, 1 or 2 for the shorts wB, bwb, Bw; raises on longs."""
        return _SHORT_WORDS.index(self.word)

    @property
    def left_part(self) -> Word:
        """The prefix that any well-jointed product starting here begins with."""
        if self.is_short:
            return _LEFT_SHORT[self.short_index]
        return self.q.inverse() * Word("bw")

    def __len__(self) -> int:
        return len(self.word)

    def sort_key(self) -> tuple:
        return self.word.sort_key()

    def __str__(self) -> str:
        return str(self.word)


SHORTS = tuple(Conjugate(w, q) for w, q in zip(_SHORT_WORDS, _SHORT_Q))


def recognize(w: Word) -> Conjugate | None:
    """Classify w as a conjugate of bwb, or return None.

    Uniqueness of reduced expressions makes this a pure pattern match:
    shorts are looked up, longs must read Q^-1 bwb Q around an exact
    center with Q beginning with 'w'.
    """
    s = w.letters
    if w in _SHORT_WORDS:
        return Conjugate(w, _SHORT_Q[_SHORT_WORDS.index(w)])
    n = len(s)
    if n < 5 or n % 2 == 0:
        return None
    k = (n - 3) // 2
    if s[k : k + 3] != "bwb":
        return None
    q = _from_reduced(s[k + 3 :])
    if s[k + 3] != "w":
        return None
    if s[:k] != q.inverse().letters:
        return None
    return Conjugate(w, q)


def conjugate_by(q: Word) -> Conjugate:
    """The conjugate q^-1 (bwb) q, classified.  Total: always a conjugate."""
    c = recognize(q.inverse() * CORE * q)
    assert c is not None
    return c


def joins_well(g: Conjugate, h: Conjugate) -> bool:
    """len(g*h) >= max(len(g), len(h)); pairs failing this join badly."""
    return len(g.word * h.word) >= max(len(g.word), len(h.word))


def is_well_jointed(entries) -> bool:
    """All adjacent pairs join well; empty and singleton tuples qualify."""
    return all(joins_well(entries[i], entries[i + 1]) for i in range(len(entries) - 1))


def bad_successor(g: Conjugate) -> Conjugate:
    """The short s with (g, s) joining badly, keyed by g's last letter.

    Last letter w -> wB, b -> Bw, B -> bwb; a two-letter cancellation at
    the juncture collapses the product below max length in each case.
    """
    return SHORTS[{"w": 0, "b": 2, "B": 1}[g.word.letters[-1]]]


def bad_predecessor(g: Conjugate) -> Conjugate:
    """The short s with (s, g) joining badly, keyed by g's first letter."""
    return SHORTS[{"w": 2, "b": 0, "B": 1}[g.word.letters[0]]]
