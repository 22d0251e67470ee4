import itertools
import random

import pytest

from tightmono.roots import (
    CartanSpec,
    InvalidWord,
    Monomial,
    NonDominantWeight,
    ReducedWord,
    RootVec,
    Weight,
    exponent_sequence,
    pairing,
    reflect,
    validate_w0_word,
    weight_of_monomial,
    xlambda,
)

A2 = CartanSpec.type_a(2)
A5 = CartanSpec.type_a(5)
D4 = CartanSpec.type_d4()

A5_WORD_LOW = ReducedWord((1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1))
A5_WORD_HIGH = ReducedWord((5, 4, 5, 3, 4, 5, 2, 3, 4, 5, 1, 2, 3, 4, 5))
D4_WORD = ReducedWord((2, 1, 3, 4) * 3)


def a5_exponents_low(a1, a2, a3, a4, a5):
    # Exponent list of the monomial along A5_WORD_LOW, written out directly.
    return (
        a1, a1 + a2, a2, a1 + a2 + a3, a2 + a3, a3,
        a1 + a2 + a3 + a4, a2 + a3 + a4, a3 + a4, a4,
        a1 + a2 + a3 + a4 + a5, a2 + a3 + a4 + a5, a3 + a4 + a5, a4 + a5, a5,
    )


def a5_exponents_high(a1, a2, a3, a4, a5):
    return (
        a5, a4 + a5, a4, a3 + a4 + a5, a3 + a4, a3,
        a2 + a3 + a4 + a5, a2 + a3 + a4, a2 + a3, a2,
        a1 + a2 + a3 + a4 + a5, a1 + a2 + a3 + a4, a1 + a2 + a3, a1 + a2, a1,
    )


def d4_exponents(a1, a2, a3, a4):
    return (
        a2, a1 + a2, a2 + a3, a2 + a4,
        a1 + 2 * a2 + a3 + a4, a2 + a3 + a4, a1 + a2 + a4, a1 + a2 + a3,
        a1 + a2 + a3 + a4, a1, a3, a4,
    )


def test_cartan_matrices():
    assert A2.matrix == ((2, -1), (-1, 2))
    assert A5.positive_root_count == 15
    assert D4.positive_root_count == 12
    assert D4.a(2, 1) == D4.a(2, 3) == D4.a(2, 4) == -1
    assert D4.a(1, 3) == D4.a(1, 4) == D4.a(3, 4) == 0
    for spec in (A2, A5, D4):
        assert spec.matrix == tuple(zip(*spec.matrix))  # symmetric


def test_from_name():
    assert CartanSpec.from_name("A3").kind == "A3"
    assert CartanSpec.from_name("D4").kind == "D4"
    with pytest.raises(ValueError):
        CartanSpec.from_name("E8")


def test_pairing():
    assert pairing(Weight((1, 1, 1, 1, 1)), 3) == 1
    assert pairing(Weight((0, 2, 0, 0, 0)), 1) == 0
    assert pairing(Weight((0, 2, 0, 0, 0)), 2) == 2
    with pytest.raises(IndexError):
        pairing(Weight((1, 1)), 3)


def test_reflect_fixed_point_and_involution():
    rng = random.Random(11)
    for _ in range(30):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(5)))
        i = rng.randint(1, 5)
        assert reflect(reflect(lam, i, A5), i, A5) == lam
        if lam.coords[i - 1] == 0:
            assert reflect(lam, i, A5) == lam


def test_reflect_a2_example():
    assert reflect(Weight((1, 0)), 1, A2) == Weight((-1, 1))


def test_validate_w0_words():
    assert validate_w0_word(A5_WORD_LOW, A5)
    assert validate_w0_word(A5_WORD_HIGH, A5)
    assert validate_w0_word(D4_WORD, D4)
    assert validate_w0_word(ReducedWord((1, 2, 1)), A2)
    assert not validate_w0_word(ReducedWord((1,) * 15), A5)
    assert not validate_w0_word(ReducedWord((1, 2)), A2)  # too short
    assert not validate_w0_word(ReducedWord((2, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2)), A5)


def test_validate_rejects_adjacent_repeats():
    rng = random.Random(12)
    for _ in range(20):
        letters = [rng.randint(1, 5) for _ in range(15)]
        p = rng.randrange(14)
        letters[p + 1] = letters[p]
        assert not validate_w0_word(ReducedWord(tuple(letters)), A5)


def test_standard_w0_words_are_valid():
    for spec in (A2, CartanSpec.type_a(3), CartanSpec.type_a(4), A5, D4):
        assert validate_w0_word(spec.standard_w0_word(), spec)
    assert A5.standard_w0_word() == A5_WORD_LOW


def test_exponent_sequence_unit_weights():
    ones5 = Weight((1, 1, 1, 1, 1))
    assert exponent_sequence(A5_WORD_LOW, ones5, A5) == (1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1)
    assert exponent_sequence(A5_WORD_HIGH, ones5, A5) == (1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1)
    assert exponent_sequence(D4_WORD, Weight((1, 1, 1, 1)), D4) == (1, 2, 2, 2, 5, 3, 3, 3, 4, 1, 1, 1)


def test_exponent_sequence_matches_general_formulas():
    rng = random.Random(13)
    for _ in range(25):
        a = tuple(rng.randint(0, 3) for _ in range(5))
        assert exponent_sequence(A5_WORD_LOW, Weight(a), A5) == a5_exponents_low(*a)
        assert exponent_sequence(A5_WORD_HIGH, Weight(a), A5) == a5_exponents_high(*a)
    for _ in range(25):
        a = tuple(rng.randint(0, 3) for _ in range(4))
        assert exponent_sequence(D4_WORD, Weight(a), D4) == d4_exponents(*a)


def test_exponent_sequence_errors():
    with pytest.raises(NonDominantWeight):
        exponent_sequence(A5_WORD_LOW, Weight((1, -1, 0, 0, 0)), A5)
    with pytest.raises(InvalidWord):
        exponent_sequence(ReducedWord((1,) * 15), Weight((1, 0, 0, 0, 0)), A5)


def test_xlambda():
    m = xlambda(A5_WORD_LOW, Weight((1, 0, 0, 0, 0)), A5)
    assert tuple(a for _, a in m.factors) == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0)
    assert m.drop_zeros().factors == ((1, 1), (2, 1), (3, 1), (4, 1), (5, 1))
    assert xlambda(A5_WORD_LOW, Weight((0,) * 5), A5).drop_zeros().factors == ()
    m = xlambda(D4_WORD, Weight((1, 0, 0, 0)), D4)
    assert tuple(a for _, a in m.factors) == (0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 0)


def test_weight_of_monomial():
    m = xlambda(A5_WORD_LOW, Weight((1, 1, 1, 1, 1)), A5)
    assert weight_of_monomial(m, A5) == RootVec((5, 8, 9, 8, 5))
    assert weight_of_monomial(Monomial(()), A5) == RootVec((0, 0, 0, 0, 0))
    assert weight_of_monomial(Monomial(((1, 2), (2, 1), (1, 1))), A2) == RootVec((3, 1))


def test_exponent_totals_match_height():
    rng = random.Random(14)
    for _ in range(20):
        a = Weight(tuple(rng.randint(0, 3) for _ in range(5)))
        exps = exponent_sequence(A5_WORD_LOW, a, A5)
        assert sum(exps) == weight_of_monomial(xlambda(A5_WORD_LOW, a, A5), A5).height


def test_both_words_same_weight_small_box():
    for a in itertools.product(range(4), repeat=5):
        lam = Weight(a)
        w_low = weight_of_monomial(xlambda(A5_WORD_LOW, lam, A5), A5)
        w_high = weight_of_monomial(xlambda(A5_WORD_HIGH, lam, A5), A5)
        assert w_low == w_high, a


def test_w0_antidominant():
    rng = random.Random(15)
    for word, spec, n in ((A5_WORD_LOW, A5, 5), (A5_WORD_HIGH, A5, 5), (D4_WORD, D4, 4)):
        for _ in range(10):
            lam = Weight(tuple(rng.randint(0, 4) for _ in range(n)))
            mu = lam
            for i in word.letters:
                mu = reflect(mu, i, spec)
            assert all(c <= 0 for c in mu.coords), (word, lam)


def test_monomial_flatten_and_degree():
    m = Monomial(((1, 2), (2, 0), (3, 1)))
    assert m.flatten() == (1, 1, 3)
    assert m.degree == 3
    assert m.drop_zeros().factors == ((1, 2), (3, 1))


def test_weight_parse():
    assert Weight.parse("1,0,2").coords == (1, 0, 2)
    assert not Weight((0, -1)).is_dominant
