"""Exact SL(2,Z) arithmetic and its bridge to the modular group.

Matrices carry arbitrary-precision integer entries (plain Python ints)
and determinant 1, checked at construction.  The generators used are

    S = [[0,-1],[1,0]]     U = [[1,1],[0,1]]     R = S*U

whose classes in PSL(2,Z) are w, wb and b respectively.

The text format is "a b; c d"; the JSON form is [[a,b],[c,d]] with the
entries as decimal strings, since they routinely outgrow doubles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .conjugates import recognize
from .words import Word, from_core, reduce_letters, to_core


class MatrixSyntaxError(ValueError):
    """Raised when text does not parse as a 2x2 integer matrix."""


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(
                f"determinant is {self.a * self.d - self.b * self.c}, must be 1"
            )

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __pow__(self, n: int) -> "SL2Matrix":
        if n < 0:
            return self.inverse() ** (-n)
        out = I2
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        return f"{self.a} {self.b}; {self.c} {self.d}"

    def to_json(self) -> list:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]


I2 = SL2Matrix(1, 0, 0, 1)
S = SL2Matrix(0, -1, 1, 0)
U = SL2Matrix(1, 1, 0, 1)
R = S * U

_ENTRY = re.compile(r"[+-]?\d+$")


def parse_matrix(text: str) -> SL2Matrix:
    """Parse "a b; c d" with optional signs and arbitrary-size entries."""
    rows = text.split(";")
    if len(rows) != 2:
        raise MatrixSyntaxError("expected two rows separated by ';'")
    entries = []
    for row in rows:
        parts = row.split()
        if len(parts) != 2:
            raise MatrixSyntaxError(f"expected two entries per row, got {row.strip()!r}")
        for p in parts:
            if not _ENTRY.match(p):
                raise MatrixSyntaxError(f"bad integer {p!r}")
            entries.append(int(p))
    return SL2Matrix(*entries)


# An SU-word is a sequence of (generator, exponent) pairs with generator
# 'S' or 'U', nonzero exponents, and adjacent generators distinct.
SUWord = tuple


def su_product(word: SUWord) -> SL2Matrix:
    out = I2
    for gen, exp in word:
        out = out * ((S if gen == "S" else U) ** exp)
    return out


def format_su(word: SUWord) -> str:
    if not word:
        return "1"
    return " ".join(f"{gen}^{exp}" for gen, exp in word)


def _coalesce(pairs) -> SUWord:
    out: list = []
    for gen, exp in pairs:
        if out and out[-1][0] == gen:
            exp += out.pop()[1]
        if gen == "S":
            exp %= 4
        if exp:
            out.append((gen, exp))
    return tuple(out)


def decompose_su(m: SL2Matrix) -> SUWord:
    """Write m as a word in S and U, by Euclid on the first column.

    Premultiplying by U^-n subtracts n times the second row from the
    first; premultiplying by S swaps the rows and negates the new first.
    Quotients are chosen so remainders satisfy 0 <= r < |c|, which makes
    the output deterministic for negative entries.  The accumulated
    premultipliers are inverted and emitted in reverse, with the residual
    sign expressed through S^2 = -I.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    ops = []  # premultipliers, in the order they were applied
    while c != 0:
        if abs(a) >= abs(c):
            r = a % abs(c)
            n = (a - r) // c
            ops.append(("U", -n))
            a, b = r, b - n * d
        else:
            ops.append(("S", 1))
            a, b, c, d = -c, -d, a, b
    # now m has been driven to [[a, b], [0, d]] with a = d = +-1
    tail: list = []
    if a == 1:
        if b:
            tail.append(("U", b))
    else:
        tail.append(("S", 2))
        if b:
            tail.append(("U", -b))
    # (p_k ... p_1)^-1 = p_1^-1 ... p_k^-1: invert entrywise, keep the order
    inverted = [(gen, -exp) for gen, exp in ops]
    word = _coalesce(inverted + tail)
    assert su_product(word) == m
    return word


def project(m: SL2Matrix) -> Word:
    """The class of m in PSL(2,Z) as a reduced word: S -> w, U -> wb."""
    letters = []
    for gen, exp in decompose_su(m):
        if gen == "S":
            letters.append("w" * (exp % 2))
        elif exp > 0:
            letters.append("wb" * exp)
        else:
            letters.append("Bw" * (-exp))
    return reduce_letters("".join(letters))


def word_to_matrix(w: Word) -> SL2Matrix:
    """A fixed matrix preimage of w: letterwise w -> S, b -> R, B -> R^2."""
    out = I2
    for c in w.letters:
        out = out * {"w": S, "b": R, "B": R * R}[c]
    return out


def lift_factorization(entries) -> tuple:
    """The unique entrywise lift of a tuple of conjugates of wb in which
    every matrix is a conjugate of U, i.e. has trace 2.

    Raises ValueError naming the offending index if an entry is not a
    conjugate of wb.
    """
    out = []
    for i, w in enumerate(entries):
        c = recognize(to_core(w))
        if c is None:
            raise ValueError(f"entry {i + 1} ({w}) is not a conjugate of wb")
        # w == a * (wb) * a^-1 with a the carried-back conjugator
        a = from_core(c.q.inverse())
        m = word_to_matrix(a)
        lift = m * U * m.inverse()
        if lift.trace == -2:
            lift = -lift
        assert lift.trace == 2
        out.append(lift)
    return tuple(out)
