"""Seeded generators shared across the test modules."""

import random

from hurwitzfact import Factorization, SL2Matrix, conjugate_by, su_product
from hurwitzfact.words import Word, _from_reduced

_NEXT = {"": "wbB", "w": "bB", "b": "w", "B": "w"}


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    letters = []
    prev = ""
    for _ in range(n):
        prev = rng.choice(_NEXT[prev])
        letters.append(prev)
    return _from_reduced("".join(letters))


def all_words(max_len: int):
    """Every reduced word of length at most max_len, identity included."""
    level = [""]
    out = [Word("")]
    for _ in range(max_len):
        level = [s + c for s in level for c in _NEXT[s[-1] if s else ""]]
        out.extend(_from_reduced(s) for s in level)
    return out


def random_conjugate(rng: random.Random, max_entry_len: int):
    # long entries have length 2*len(q) + 3, so cap the conjugator instead
    q = random_word(rng, (max_entry_len - 3) // 2)
    return conjugate_by(q)


def random_factorization(rng: random.Random, max_n: int, max_entry_len: int) -> Factorization:
    n = rng.randint(0, max_n)
    return Factorization([random_conjugate(rng, max_entry_len) for _ in range(n)])


def random_su_word(rng: random.Random, max_len: int) -> tuple:
    word = []
    for _ in range(rng.randint(0, max_len)):
        if not word:
            gen = rng.choice("SU")
        else:
            gen = "S" if word[-1][0] == "U" else "U"
        exp = rng.choice([e for e in range(-5, 6) if e])
        word.append((gen, exp))
    return tuple(word)


def random_sl2(rng: random.Random, max_len: int = 8) -> SL2Matrix:
    return su_product(random_su_word(rng, max_len))
