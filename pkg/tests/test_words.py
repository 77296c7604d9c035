"""Twist words, their parsing, and the induced matrices."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftcover import (
    BasisConvention,
    Generator,
    GeneratorRangeError,
    MCGWord,
    ResidueMatrix,
    SquareMatrix,
    WordSyntaxError,
    format_word,
    iota_matrix,
    is_symplectic,
    mat_mul,
    mat_vec,
    parse_word,
    psi,
    psi_k,
    symplectic_inverse,
    twist_matrix,
    twist_power,
    word,
)

from helpers import naive_mat_mul


def all_generators(genus):
    gens = []
    for i in range(1, genus + 1):
        gens.append(Generator("a", i))
        gens.append(Generator("b", i))
    for j in range(1, genus):
        gens.append(Generator("c", j))
    return gens


def random_word_text(rng, genus, length):
    names = [g.label() for g in all_generators(genus)]
    parts = []
    for _ in range(length):
        name = rng.choice(names)
        exp = rng.choice((-3, -2, -1, 1, 2, 3))
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


class TestGenerator:
    def test_labels(self):
        assert Generator("a", 2).label() == "a2"
        assert Generator("iota").label() == "iota"

    def test_range_check(self):
        Generator("c", 1).check_genus(2)
        with pytest.raises(GeneratorRangeError):
            Generator("c", 2).check_genus(2)
        with pytest.raises(GeneratorRangeError):
            Generator("a", 3).check_genus(2)
        with pytest.raises(GeneratorRangeError):
            Generator("c", 1).check_genus(1)


class TestTwistMatrices:
    def test_a1_genus1(self):
        assert twist_matrix(Generator("a", 1), 1).entries == ((1, 1), (0, 1))

    def test_b1_genus1(self):
        assert twist_matrix(Generator("b", 1), 1).entries == ((1, 0), (-1, 1))

    def test_a2_genus2(self):
        m = twist_matrix(Generator("a", 2), 2)
        assert m.entries == (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 1),
            (0, 0, 0, 1),
        )

    def test_b2_genus2(self):
        m = twist_matrix(Generator("b", 2), 2)
        assert m.entries == (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, -1, 1),
        )

    def test_c1_genus2(self):
        m = twist_matrix(Generator("c", 1), 2)
        assert m.entries == (
            (1, 1, 0, -1),
            (0, 1, 0, 0),
            (0, -1, 1, 1),
            (0, 0, 0, 1),
        )

    def test_all_twists_symplectic(self):
        for genus in (1, 2, 3, 4):
            for gen in all_generators(genus):
                assert is_symplectic(twist_matrix(gen, genus)), gen.label()

    def test_power_law(self):
        # each twist image is I + N with N^2 = 0, so powers are linear in m
        for genus in (1, 2, 3):
            for gen in all_generators(genus):
                base = twist_matrix(gen, genus)
                for m in (-7, -2, 0, 1, 2, 5):
                    direct = twist_power(gen, m, genus)
                    if m >= 0:
                        assert direct.entries == (base ** m).entries
                    else:
                        inv = symplectic_inverse(base) ** (-m)
                        assert direct.entries == inv.entries

    def test_iota(self):
        assert iota_matrix(1).entries == ((-1, 0), (0, -1))
        m = iota_matrix(2)
        assert all(
            m.entries[i][j] == (-1 if i == j else 0)
            for i in range(4)
            for j in range(4)
        )


class TestPsi:
    def test_empty_word_is_identity(self):
        assert psi(word(2)).entries == SquareMatrix.identity(4).entries

    def test_single_letter(self):
        w = word(2, ("a", 1, 3))
        want = twist_power(Generator("a", 1), 3, 2)
        assert psi(w).entries == want.entries

    def test_left_to_right_order(self):
        w = parse_word("a1 b1", 1)
        a = twist_matrix(Generator("a", 1), 1)
        b = twist_matrix(Generator("b", 1), 1)
        assert psi(w).entries == mat_mul(a, b).entries
        assert psi(w).entries == ((0, 1), (-1, 1))

    def test_homomorphism(self):
        rng = random.Random(101)
        for _ in range(500):
            genus = rng.choice((1, 2, 3))
            u = parse_word(random_word_text(rng, genus, rng.randint(1, 8)), genus)
            v = parse_word(random_word_text(rng, genus, rng.randint(1, 8)), genus)
            assert psi(u * v).entries == mat_mul(psi(u), psi(v)).entries

    def test_psi_matches_naive_product(self):
        rng = random.Random(103)
        for _ in range(40):
            genus = rng.choice((1, 2))
            text = random_word_text(rng, genus, 6)
            w = parse_word(text, genus)
            acc = [
                [1 if i == j else 0 for j in range(2 * genus)]
                for i in range(2 * genus)
            ]
            for letter, exp in w.letters:
                m = twist_power(letter, exp, genus)
                acc = naive_mat_mul(acc, [list(r) for r in m.entries])
            assert [list(r) for r in psi(w).entries] == acc

    def test_images_symplectic(self):
        rng = random.Random(107)
        for _ in range(100):
            genus = rng.choice((1, 2, 3))
            w = parse_word(random_word_text(rng, genus, 10), genus)
            assert is_symplectic(psi(w))

    def test_inverse_word(self):
        rng = random.Random(109)
        for _ in range(50):
            genus = rng.choice((1, 2, 3))
            w = parse_word(random_word_text(rng, genus, 6), genus)
            left = psi(w.inverse())
            right = symplectic_inverse(psi(w))
            assert left.entries == right.entries

    def test_iota_in_words(self):
        w = parse_word("iota", 2)
        assert psi(w).entries == iota_matrix(2).entries
        assert psi(parse_word("iota^2", 2)).entries == SquareMatrix.identity(4).entries
        # central: commutes with everything
        u = parse_word("a1 iota b2 c1", 2)
        v = parse_word("iota a1 b2 c1", 2)
        assert psi(u).entries == psi(v).entries


class TestPsiK:
    def test_matches_integer_reduction(self):
        rng = random.Random(113)
        for _ in range(100):
            genus = rng.choice((1, 2, 3))
            k = rng.randint(2, 12)
            w = parse_word(random_word_text(rng, genus, 8), genus)
            assert psi_k(w, k).entries == psi(w).mod(k).entries

    def test_returns_residue_matrix(self):
        m = psi_k(parse_word("a1^5", 1), 5)
        assert isinstance(m, ResidueMatrix)
        assert m.entries == ((1, 0), (0, 1))

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            psi_k(parse_word("a1", 1), 0)


class TestParsing:
    def test_basic(self):
        w = parse_word("a1 b1^-1 c1^2", 2)
        assert [(g.label(), e) for g, e in w.letters] == [
            ("a1", 1),
            ("b1", -1),
            ("c1", 2),
        ]

    def test_whitespace_tolerated(self):
        w = parse_word("  a1   b2 ", 2)
        assert len(w.letters) == 2

    def test_empty_text_rejected(self):
        with pytest.raises(WordSyntaxError):
            parse_word("", 2)
        with pytest.raises(WordSyntaxError):
            parse_word("   ", 2)

    def test_empty_word_via_constructor(self):
        assert word(2).letters == ()

    def test_zero_exponent_dropped(self):
        assert parse_word("a1^0", 2).letters == ()

    def test_syntax_error_position(self):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word("a1 x3 b1", 2)
        assert exc.value.position == 3

    def test_malformed_exponent(self):
        with pytest.raises(WordSyntaxError):
            parse_word("a1^", 2)
        with pytest.raises(WordSyntaxError):
            parse_word("a1^^2", 2)

    def test_range_error(self):
        with pytest.raises(GeneratorRangeError) as exc:
            parse_word("a1 c2 b1", 2)
        assert "c2" in str(exc.value)
        with pytest.raises(GeneratorRangeError):
            parse_word("c1", 1)

    def test_format_round_trip_examples(self):
        for text in ("a1 b1^-1 c1^2", "iota a2^3", "b3"):
            w = parse_word(text, 3)
            assert format_word(w) == text
            assert parse_word(format_word(w), 3).letters == w.letters

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_format_round_trip_random(self, data):
        genus = data.draw(st.integers(min_value=1, max_value=4))
        names = [g.label() for g in all_generators(genus)] + ["iota"]
        n = data.draw(st.integers(min_value=1, max_value=8))
        parts = []
        for _ in range(n):
            name = data.draw(st.sampled_from(names))
            exp = data.draw(
                st.integers(min_value=-9, max_value=9).filter(lambda e: e != 0)
            )
            parts.append(name if exp == 1 else f"{name}^{exp}")
        text = " ".join(parts)
        w = parse_word(text, genus)
        again = parse_word(format_word(w), genus)
        assert again.letters == w.letters


class TestBasisConvention:
    def test_slots(self):
        conv = BasisConvention(3)
        assert conv.a_column(1) == 0
        assert conv.b_column(1) == 1
        assert conv.a_column(3) == 4
        assert conv.b_column(3) == 5

    def test_twist_fixes_own_curve_vector(self):
        # T_{a_i} fixes the a_i homology vector, T_{b_i} fixes b_i
        genus = 3
        conv = BasisConvention(genus)
        for i in range(1, genus + 1):
            ea = tuple(
                1 if c == conv.a_column(i) else 0 for c in range(2 * genus)
            )
            eb = tuple(
                1 if c == conv.b_column(i) else 0 for c in range(2 * genus)
            )
            assert mat_vec(twist_matrix(Generator("a", i), genus), ea) == ea
            assert mat_vec(twist_matrix(Generator("b", i), genus), eb) == eb


class TestMCGWordOps:
    def test_len_counts_letters(self):
        w = parse_word("a1^3 b1^-2 iota", 2)
        assert len(w) == 3

    def test_mul_requires_same_genus(self):
        with pytest.raises(ValueError):
            parse_word("a1", 1) * parse_word("a1", 2)

    def test_inverse_reverses_and_negates(self):
        w = parse_word("a1 b1^2", 2)
        assert [(g.label(), e) for g, e in w.inverse().letters] == [
            ("b1", -2),
            ("a1", -1),
        ]
