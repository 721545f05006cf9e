import random

from hurwitzfact import (
    CORE,
    IDENTITY,
    SHORTS,
    conjugate_by,
    is_well_jointed,
    joins_well,
    parse_word,
    recognize,
)
from hurwitzfact.conjugates import bad_predecessor, bad_successor
from hurwitzfact.words import B1, B2

from helpers import all_words, random_word

S0, S1, S2 = SHORTS


def test_short_words():
    assert str(S0) == "wB" and str(S1) == "bwb" and str(S2) == "Bw"
    assert [s.short_index for s in SHORTS] == [0, 1, 2]
    # minimal conjugators reproduce the words
    for s in SHORTS:
        assert s.q.inverse() * CORE * s.q == s.word


def test_recognize_shorts_and_longs():
    assert recognize(parse_word("bwb")).short_index == 1
    assert recognize(parse_word("wbw")) is None
    c = recognize(parse_word("wbwbw"))
    assert c is not None and not c.is_short and c.q == parse_word("w")
    assert len(c.word) == 5


def test_recognize_is_exact_on_small_words():
    # recognized <=> equal to q^-1 (bwb) q for some conjugator; cross-check
    # against the set of all conjugates generated by small conjugators
    conjugates = {conjugate_by(q).word for q in all_words(4)}
    for w in all_words(9):
        c = recognize(w)
        if w in conjugates:
            assert c is not None and c.word == w
        else:
            assert c is None or len(c.q) > 4


def test_conjugate_by():
    assert conjugate_by(IDENTITY).short_index == 1
    assert conjugate_by(B1).short_index == 0  # b^-1 (bwb) b = wB
    assert conjugate_by(B2).short_index == 2  # B^-1 (bwb) B = Bw
    c = conjugate_by(parse_word("wB"))
    assert not c.is_short and len(c.word) == 2 * len(c.q) + 3


def test_conjugate_by_always_recognized():
    rng = random.Random(20)
    for _ in range(400):
        q = random_word(rng, 30)
        c = conjugate_by(q)
        assert c.word == c.q.inverse() * CORE * c.q
        if not c.is_short:
            assert c.q.letters.startswith("w")
            assert len(c.word) == 2 * len(c.q) + 3


def test_left_parts():
    assert str(S0.left_part) == "w"
    assert str(S1.left_part) == "bw"
    assert str(S2.left_part) == "Bw"
    assert str(recognize(parse_word("wbwbw")).left_part) == "wbw"


def test_left_part_is_prefix():
    # proper for every conjugate except Bw, whose left part is itself
    rng = random.Random(21)
    for _ in range(300):
        c = conjugate_by(random_word(rng, 12))
        assert c.word.begins_with(c.left_part)
        assert len(c.left_part) < len(c.word) or c.word == S2.word


def test_join_table_matches_known_identities():
    # exactly (wB,bwb), (bwb,Bw), (Bw,wB) join badly among the shorts
    bad = {(0, 1), (1, 2), (2, 0)}
    for i in range(3):
        for j in range(3):
            assert joins_well(SHORTS[i], SHORTS[j]) == ((i, j) not in bad)


def test_well_jointed_predicate():
    assert is_well_jointed(())
    assert is_well_jointed((S1,))
    assert is_well_jointed((S0, S2))
    assert not is_well_jointed((S2, S0))
    assert not is_well_jointed((S2, S2, S0))


def test_bad_neighbor_tables():
    rng = random.Random(22)
    for _ in range(300):
        g = conjugate_by(random_word(rng, 10))
        assert not joins_well(g, bad_successor(g))
        assert not joins_well(bad_predecessor(g), g)
