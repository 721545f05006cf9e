"""Reduced-word arithmetic in the modular group PSL(2,Z) = Z2 * Z3.

The group is presented as <w, b | w^2 = b^3 = 1>.  An element is stored as
its unique reduced expression: a string over the three letters

    'w'  (the order-2 generator),
    'b'  (the order-3 generator),
    'B'  (its square, a letter in its own right),

in which powers of b never sit next to each other and 'w' never sits next
to 'w'.  The empty string is the identity and prints as "1".

Words are immutable and hashable; all arithmetic returns new words.
"""

from __future__ import annotations

from typing import Iterable, Iterator

LETTERS = "wbB"

# exponent of the order-3 generator carried by each letter (0 for 'w')
_B_EXP = {"w": 0, "b": 1, "B": 2}

# w -> w, b -> B, B -> b; used both for inversion and for the exponent-swap
# automorphism
_FLIP = {"w": "w", "b": "B", "B": "b"}

# sort rank: 'w' < 'b' < 'B'
_RANK = {"w": 0, "b": 1, "B": 2}


class WordSyntaxError(ValueError):
    """Raised when text does not parse as a reduced word."""


class Word:
    """A reduced word; construct via :func:`parse_word`, :func:`reduce_letters`,
    or directly from a string that is already reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters: str = ""):
        for i in range(len(letters)):
            c = letters[i]
            if c not in _B_EXP:
                raise WordSyntaxError(f"invalid letter {c!r} at position {i + 1}")
            if i and not _alternates(letters[i - 1], c):
                raise WordSyntaxError(
                    f"word is not reduced at position {i + 1}: "
                    f"{letters[i - 1]!r} followed by {c!r}"
                )
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Reduced product, by stack cancellation at the juncture.

        >>> parse_word("wB") * parse_word("Bw")
        Word('wbw')
        >>> parse_word("wB") * parse_word("bwb")
        Word('b')
        """
        stack = list(self.letters)
        for c in other.letters:
            _push(stack, c)
        return _from_reduced("".join(stack))

    def inverse(self) -> "Word":
        return _from_reduced("".join(_FLIP[c] for c in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def begins_with(self, prefix: "Word") -> bool:
        return self.letters.startswith(prefix.letters)

    def sort_key(self) -> tuple:
        """Total order: shorter first, then letterwise with w < b < B."""
        return (len(self.letters), tuple(_RANK[c] for c in self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.letters or "1"

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


def _alternates(prev: str, cur: str) -> bool:
    if prev == "w":
        return cur != "w"
    return cur == "w"


def _push(stack: list, c: str) -> None:
    # Invariant: stack always spells a reduced word.
    if not stack:
        stack.append(c)
        return
    top = stack[-1]
    if c == "w":
        if top == "w":
            stack.pop()
        else:
            stack.append(c)
        return
    if top == "w":
        stack.append(c)
        return
    # two adjacent powers of b merge mod 3
    e = (_B_EXP[top] + _B_EXP[c]) % 3
    stack.pop()
    if e:
        # after the pop the new top is 'w' or nothing, so appending is safe
        stack.append("b" if e == 1 else "B")


def _from_reduced(letters: str) -> Word:
    # internal fast path: letters are known reduced, skip validation
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", letters)
    return w


IDENTITY = Word()
W = Word("w")
B1 = Word("b")
B2 = Word("B")


def reduce_letters(raw: Iterable[str]) -> Word:
    """Fold an arbitrary letter sequence into its reduced word.

    >>> reduce_letters("ww")
    Word('')
    >>> reduce_letters("wbbwB")
    Word('wBwB')
    """
    stack: list = []
    for c in raw:
        if c not in _B_EXP:
            raise WordSyntaxError(f"invalid letter {c!r}")
        _push(stack, c)
    return _from_reduced("".join(stack))


def parse_word(text: str) -> Word:
    """Parse the serialized form: "1" for the identity, else a reduced
    string of letters.  Non-reduced input is rejected, not repaired."""
    if text == "1":
        return IDENTITY
    if not text:
        raise WordSyntaxError("empty input; the identity is written '1'")
    return Word(text)


def swap_exponents(a: Word) -> Word:
    """The automorphism fixing w and exchanging b with B (an involution)."""
    return _from_reduced("".join(_FLIP[c] for c in a.letters))


def to_core(a: Word) -> Word:
    """Conjugation by b composed with the exponent swap.

    Carries conjugates of wb to conjugates of bwb, which is where the
    factor-enumeration machinery operates.
    """
    return B1 * swap_exponents(a) * B2


def from_core(a: Word) -> Word:
    """Inverse of :func:`to_core`."""
    return swap_exponents(B2 * a * B1)
