"""Membership predicates, witnesses, reports, and index formulas."""

import math
import random

import pytest

from liftcover import (
    CongruenceFlags,
    LiftReport,
    NotSymplecticError,
    ResidueMatrix,
    ShapeError,
    SquareMatrix,
    congruence_class_g1,
    count_primitive,
    in_level_k,
    in_stab_e1,
    in_umod,
    index_lmod,
    index_stab_e1,
    is_liftable,
    lcm_intersection_check,
    level_k_witness,
    lift_report,
    liftable_witness,
    mat_mul,
    mat_vec,
    parse_word,
    psi,
    psi_k,
    stab_e1_witness,
    stabilizes_e1_class,
    symplectic_inverse,
    totient,
)
from liftcover.sampling import (
    random_level_word,
    random_liftable_word,
    random_stab_word,
    random_word,
)

from helpers import brute_count_primitive


def naive_stabilizes(m):
    """Direct check that the image of e1 is a unit multiple of e1."""
    k = m.modulus
    e1 = (1,) + (0,) * (m.n - 1)
    image = mat_vec(m, e1)
    for u in range(1, k):
        if math.gcd(u, k) != 1:
            continue
        if image == tuple((u * x) % k for x in e1):
            return True
    return False


class TestLiftable:
    def test_a1_liftable(self):
        assert is_liftable(psi_k(parse_word("a1", 1), 5))

    def test_b1_not_liftable_with_witness(self):
        assert liftable_witness(psi_k(parse_word("b1", 1), 3)) == (2, 1, 2)
        assert liftable_witness(psi_k(parse_word("b1", 1), 5)) == (2, 1, 4)

    def test_b1_power_k_is_liftable(self):
        # the k-th power of any twist reduces to the identity mod k
        assert is_liftable(psi_k(parse_word("b1^6", 1), 6))

    def test_witness_none_iff_liftable(self):
        rng = random.Random(211)
        for _ in range(100):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 9)
            m = psi_k(random_word(rng, genus, 10), k)
            assert (liftable_witness(m) is None) == is_liftable(m)

    def test_row_two_criterion_matches_column_criterion(self):
        rng = random.Random(223)
        for _ in range(300):
            genus = rng.choice((1, 2, 3))
            k = rng.randint(2, 8)
            m = psi_k(random_word(rng, genus, 12), k)
            assert is_liftable(m) == stabilizes_e1_class(m)

    def test_column_criterion_matches_naive_orbit_check(self):
        rng = random.Random(227)
        for _ in range(150):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 9)
            m = psi_k(random_word(rng, genus, 10), k)
            assert stabilizes_e1_class(m) == naive_stabilizes(m)

    def test_rejects_non_symplectic(self):
        with pytest.raises(NotSymplecticError):
            is_liftable(ResidueMatrix(((1, 1), (1, 1)), 5))

    def test_rejects_integer_matrix(self):
        with pytest.raises(ShapeError):
            is_liftable(SquareMatrix(((1, 0), (0, 1))))

    def test_rejects_odd_dimension(self):
        with pytest.raises(ShapeError):
            is_liftable(ResidueMatrix(((1,),), 5))


class TestSubgroupChain:
    def test_stab_examples(self):
        assert in_stab_e1(psi_k(parse_word("a1", 1), 5))
        assert not in_stab_e1(psi_k(parse_word("iota", 1), 5))
        assert stab_e1_witness(psi_k(parse_word("iota", 1), 5)) == (1, 1, 4)

    def test_level_examples(self):
        assert in_level_k(psi_k(parse_word("a1^6", 1), 6))
        assert level_k_witness(psi_k(parse_word("a1", 1), 5)) == (1, 2, 1)

    def test_chain_implications(self):
        rng = random.Random(229)
        corpus = []
        for _ in range(60):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 6)
            corpus.append((random_word(rng, genus, 8), genus, k))
            corpus.append((random_stab_word(rng, genus), genus, k))
            corpus.append((random_liftable_word(rng, genus, k), genus, k))
            corpus.append((random_level_word(rng, genus, k), genus, k))
        for w, genus, k in corpus:
            m = psi_k(w, k)
            lvl, stab, lift = in_level_k(m), in_stab_e1(m), is_liftable(m)
            if lvl:
                assert stab
            if stab:
                assert lift

    def test_constructive_samplers_hit_their_subgroups(self):
        rng = random.Random(233)
        for _ in range(50):
            genus = rng.choice((1, 2, 3))
            k = rng.randint(2, 7)
            assert in_stab_e1(psi_k(random_stab_word(rng, genus), k))
            assert is_liftable(psi_k(random_liftable_word(rng, genus, k), k))
            assert in_level_k(psi_k(random_level_word(rng, genus, k), k))

    def test_liftable_closed_under_product_and_inverse(self):
        rng = random.Random(239)
        for _ in range(60):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 7)
            u = psi_k(random_liftable_word(rng, genus, k), k)
            v = psi_k(random_liftable_word(rng, genus, k), k)
            assert is_liftable(mat_mul(u, v))
            assert is_liftable(symplectic_inverse(u))

    def test_level_k_normal_under_arbitrary_conjugation(self):
        rng = random.Random(241)
        for _ in range(60):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 6)
            w = random_level_word(rng, genus, k)
            u = random_word(rng, genus, 8)
            assert in_level_k(psi_k(u * w * u.inverse(), k))

    def test_stab_normal_inside_liftable(self):
        rng = random.Random(251)
        for _ in range(60):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 6)
            s = psi_k(random_stab_word(rng, genus), k)
            g = psi_k(random_liftable_word(rng, genus, k), k)
            conj = mat_mul(mat_mul(g, s), symplectic_inverse(g))
            assert in_stab_e1(conj)


class TestInUmod:
    def test_examples(self):
        assert in_umod(psi(parse_word("a1", 1)))
        assert in_umod(psi(parse_word("iota", 1)))
        assert not in_umod(psi(parse_word("b1", 1)))

    def test_implies_liftable_at_every_modulus(self):
        rng = random.Random(257)
        for _ in range(40):
            genus = rng.choice((1, 2))
            w = random_stab_word(rng, genus)
            a = psi(w)
            if not in_umod(a):
                continue
            for k in (2, 3, 4, 5, 6, 7):
                assert is_liftable(a.mod(k))

    def test_rejects_residue_input(self):
        with pytest.raises(ShapeError):
            in_umod(psi_k(parse_word("a1", 1), 5))


class TestLiftReport:
    def test_liftable_word(self):
        r = lift_report(parse_word("a1", 1), 3)
        assert r.k == 3
        assert r.in_lmod and r.in_stab_e1 and not r.in_level_k
        assert r.in_umod
        assert r.quotient_class == 1
        assert r.witness == (1, 2, 1)

    def test_non_liftable_word(self):
        r = lift_report(parse_word("b1", 1), 3)
        assert not r.in_lmod and not r.in_stab_e1 and not r.in_level_k
        assert r.quotient_class is None
        assert r.witness == (2, 1, 2)

    def test_iota_report(self):
        r = lift_report(parse_word("iota", 2), 5)
        assert r.in_lmod and not r.in_stab_e1
        assert r.quotient_class == 4
        assert r.witness == (1, 1, 4)
        assert r.in_umod

    def test_level_word_report(self):
        r = lift_report(parse_word("a1^4", 1), 4)
        assert r.in_level_k and r.in_stab_e1 and r.in_lmod
        assert r.witness is None
        assert r.quotient_class == 1

    def test_inconsistent_flags_rejected(self):
        with pytest.raises(ValueError):
            LiftReport(5, True, False, True, False, 1, None)
        with pytest.raises(ValueError):
            LiftReport(5, False, True, False, False, None, None)
        with pytest.raises(ValueError):
            LiftReport(5, False, False, True, False, None, None)


class TestLcmIntersection:
    def test_random_triples(self):
        rng = random.Random(263)
        for _ in range(120):
            genus = rng.choice((1, 2))
            k = rng.randint(2, 8)
            l = rng.randint(2, 8)
            w = random_word(rng, genus, 10)
            assert lcm_intersection_check(w, k, l)

    def test_bad_moduli(self):
        with pytest.raises(ValueError):
            lcm_intersection_check(parse_word("a1", 1), 0, 3)


class TestIndices:
    def test_frozen_values(self):
        assert (index_lmod(2, 3), index_stab_e1(2, 3)) == (40, 80)
        assert (index_lmod(2, 2), index_stab_e1(2, 2)) == (15, 15)
        assert (index_lmod(1, 4), index_stab_e1(1, 4)) == (6, 12)
        assert (index_lmod(3, 2), index_stab_e1(3, 2)) == (63, 63)

    def test_against_bruteforce_enumeration(self):
        for k in (2, 3, 4, 5, 6, 8):
            for g in (1, 2):
                primitive = brute_count_primitive(k, 2 * g)
                assert index_stab_e1(g, k) == primitive
                assert index_lmod(g, k) * totient(k) == primitive

    def test_validation(self):
        with pytest.raises(ValueError):
            index_lmod(0, 3)
        with pytest.raises(ValueError):
            index_stab_e1(1, 0)


class TestCongruenceG1:
    def test_unipotent(self):
        f = congruence_class_g1(SquareMatrix(((1, 1), (0, 1))), 5)
        assert (f.gamma, f.gamma1, f.gamma0) == (False, True, True)

    def test_principal_member(self):
        f = congruence_class_g1(SquareMatrix(((1, 5), (5, 26))), 5)
        assert (f.gamma, f.gamma1, f.gamma0) == (True, True, True)

    def test_triangular_only(self):
        f = congruence_class_g1(SquareMatrix(((2, 1), (5, 3))), 5)
        assert (f.gamma, f.gamma1, f.gamma0) == (False, False, True)

    def test_generic(self):
        f = congruence_class_g1(SquareMatrix(((0, -1), (1, 0))), 2)
        assert (f.gamma, f.gamma1, f.gamma0) == (False, False, False)

    def test_det_must_be_one(self):
        with pytest.raises(NotSymplecticError):
            congruence_class_g1(SquareMatrix(((1, 0), (0, -1))), 5)

    def test_shape(self):
        with pytest.raises(ShapeError):
            congruence_class_g1(SquareMatrix.identity(4), 5)

    def test_flags_match_predicates_on_words(self):
        # at genus one the three predicates recover the classical levels
        rng = random.Random(269)
        for _ in range(150):
            k = rng.randint(2, 10)
            w = random_word(rng, 1, 10)
            m = psi(w)
            mk = psi_k(w, k)
            f = congruence_class_g1(m, k)
            assert f.gamma0 == is_liftable(mk)
            assert f.gamma1 == in_stab_e1(mk)
            assert f.gamma == in_level_k(mk)

    def test_inconsistent_flags_rejected(self):
        with pytest.raises(ValueError):
            CongruenceFlags(True, False, True)
        with pytest.raises(ValueError):
            CongruenceFlags(False, True, False)
