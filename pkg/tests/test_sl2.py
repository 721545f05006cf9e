import random

import pytest

from hurwitzfact import (
    I2,
    R,
    S,
    SL2Matrix,
    U,
    decompose_su,
    format_su,
    lift_factorization,
    parse_matrix,
    parse_word,
    project,
    su_product,
    word_to_matrix,
)
from hurwitzfact.sl2 import MatrixSyntaxError

from helpers import random_sl2, random_su_word, random_word


def test_matrix_basics():
    assert U * U == SL2Matrix(1, 2, 0, 1)
    assert S * S == -I2
    assert S.inverse() == SL2Matrix(0, 1, -1, 0)
    assert R == SL2Matrix(0, -1, 1, 1)
    with pytest.raises(ValueError, match="determinant"):
        SL2Matrix(2, 0, 0, 1)


def test_inverse_and_powers():
    rng = random.Random(10)
    for _ in range(100):
        m = random_sl2(rng)
        assert m * m.inverse() == I2
        assert m**0 == I2
        assert m**3 == m * m * m
        assert m**-2 == (m.inverse()) * (m.inverse())


def test_decompose_examples():
    assert decompose_su(U) == (("U", 1),)
    assert decompose_su(S) == (("S", 1),)
    assert decompose_su(I2) == ()
    assert decompose_su(-I2) == (("S", 2),)
    m = SL2Matrix(2, 3, 1, 2)
    word = decompose_su(m)
    assert su_product(word) == m


def test_decompose_round_trip():
    rng = random.Random(11)
    for _ in range(1000):
        m = su_product(random_su_word(rng, 12))
        word = decompose_su(m)
        assert su_product(word) == m
        # well-formed: nonzero exponents, alternating generators
        assert all(exp != 0 for _, exp in word)
        assert all(word[i][0] != word[i + 1][0] for i in range(len(word) - 1))


def test_big_entries_stay_exact():
    hyperbolic = SL2Matrix(2, 1, 1, 1)
    m = hyperbolic**120  # entries grow like the 240th Fibonacci number
    assert abs(m.a) > 10**40  # far beyond any fixed-width integer
    assert su_product(decompose_su(m)) == m


def test_project_examples():
    assert project(U) == parse_word("wb")
    assert project(S) == parse_word("w")
    assert project(R) == parse_word("b")
    assert project(-I2) == parse_word("1")
    assert project(I2) == parse_word("1")


def test_project_homomorphism_and_kernel():
    rng = random.Random(12)
    for _ in range(200):
        x, y = random_sl2(rng), random_sl2(rng)
        assert project(x * y) == project(x) * project(y)
        assert project(x) == project(-x)


def test_word_to_matrix_section():
    assert word_to_matrix(parse_word("1")) == I2
    assert word_to_matrix(parse_word("w")) == S
    assert project(word_to_matrix(parse_word("wb"))) == parse_word("wb")
    rng = random.Random(13)
    for _ in range(200):
        w = random_word(rng, 15)
        assert project(word_to_matrix(w)) == w


def test_lift_examples():
    assert lift_factorization([parse_word("wb")]) == (U,)
    assert lift_factorization([]) == ()


def test_lift_uniqueness():
    rng = random.Random(14)
    u = parse_word("wb")
    for _ in range(300):
        q = random_word(rng, 12)
        g = q * u * q.inverse()
        (lift,) = lift_factorization([g])
        assert lift.trace == 2
        assert (-lift).trace == -2
        assert project(lift) == g


def test_lift_rejects_non_conjugates():
    with pytest.raises(ValueError, match="entry 2"):
        lift_factorization([parse_word("wb"), parse_word("w")])


def test_parse_matrix():
    assert parse_matrix("1 1; 0 1") == U
    assert parse_matrix("-1 0; 0 -1") == -I2
    assert parse_matrix("  2   3 ;  1 2 ") == SL2Matrix(2, 3, 1, 2)
    big = 10**40
    assert parse_matrix(f"1 {big}; 0 1") == SL2Matrix(1, big, 0, 1)
    with pytest.raises(MatrixSyntaxError):
        parse_matrix("1 1 0 1")
    with pytest.raises(MatrixSyntaxError):
        parse_matrix("1 x; 0 1")
    with pytest.raises(ValueError):
        parse_matrix("1 1; 1 1")


def test_matrix_text_round_trip():
    rng = random.Random(15)
    for _ in range(100):
        m = random_sl2(rng)
        assert parse_matrix(str(m)) == m


def test_format_su():
    assert format_su(()) == "1"
    assert format_su((("S", 1),)) == "S^1"
    assert format_su((("U", 2), ("S", 1), ("U", 2))) == "U^2 S^1 U^2"
