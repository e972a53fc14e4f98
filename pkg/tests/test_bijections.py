import pytest

from zigzag.bijections import (
    chuang_phi,
    omega,
    omega_inv,
    omega_signed,
    phi,
    phi_inv,
    phi_signed,
    psi,
    psi_b,
    psi_c,
    psi_inv,
    psi_signed,
)
from zigzag.core import perm_from_text, pleaf, tree_from_literal, tree_to_literal
from zigzag.families import iter_family

RUNNING_TREE = tree_from_literal("1(2(3(7,9)),4(5,6(8)))")
SIGNED_TREE = tree_from_literal("-8(-4(-3(6,9)),-1(2,5(7)))")

# rows: alternating, tree, Andre, Simsun images under psi, omega, phi
CHAIN_TABLE = [
    ("2143", "1(2,3(4))", "3412", "231"),
    ("3241", "1(2(3,4))", "1423", "132"),
    ("3142", "1(2(3),4)", "4123", "312"),
    ("4231", "1(2(3(4)))", "1234", "123"),
    ("4132", "1(2(4),3)", "3124", "213"),
]

# rows: signed alternating, signed tree, reverse inorder reading
SIGNED_CHAIN_TABLE = [
    ("1 -2 3", "-2(1,3)", "3 -2 1"),
    ("1 -3 2", "-3(1,2)", "2 -3 1"),
    ("1 -3 -2", "-3(-2(1))", "-3 -2 1"),
    ("213", "1(2,3)", "312"),
    ("2 -1 3", "-1(2,3)", "3 -1 2"),
    ("2 -3 1", "-3(1(2))", "-3 1 2"),
    ("2 -3 -1", "-3(-1(2))", "-3 -1 2"),
    ("312", "1(2(3))", "123"),
    ("3 -1 2", "-1(2(3))", "-1 2 3"),
    ("3 -2 1", "-2(1(3))", "-2 1 3"),
    ("3 -2 -1", "-2(-1(3))", "-2 -1 3"),
]

# rows: forced-sign Andre word of [4], its signed Simsun image
SIGNED_SHRINK_TABLE = [
    ("1234", "123"),
    ("3124", "213"),
    ("-3 1 2 4", "-2 1 3"),
    ("1423", "132"),
    ("1 -4 2 3", "1 -3 2"),
    ("4123", "312"),
    ("-4 1 2 3", "-3 1 2"),
    ("3412", "231"),
    ("-3 4 1 2", "-2 3 1"),
    ("3 -4 1 2", "2 -3 1"),
    ("-3 -4 1 2", "-2 -3 1"),
]


class TestOmega:
    def test_running_example(self):
        assert omega(RUNNING_TREE) == perm_from_text("684512937")

    def test_single_node(self):
        assert omega(tree_from_literal("1")) == (1,)

    def test_small(self):
        assert omega(tree_from_literal("1(2,3(4))")) == perm_from_text("3412")

    def test_inverse_running_example(self):
        assert omega_inv(perm_from_text("684512937")) == RUNNING_TREE

    def test_inverse_of_identity_permutation_is_the_chain(self):
        assert tree_to_literal(omega_inv((1, 2, 3, 4))) == "1(2(3(4)))"

    def test_inverse_single(self):
        assert omega_inv((1,)) == tree_from_literal("1")

    def test_inverse_rejects_non_andre(self):
        with pytest.raises(ValueError):
            omega_inv(perm_from_text("4351 2".replace(" ", "")))


class TestPhi:
    def test_running_example(self):
        assert phi(perm_from_text("684512937")) == perm_from_text("57341286")

    def test_small(self):
        assert phi(perm_from_text("3412")) == perm_from_text("231")

    def test_singleton_gives_empty(self):
        assert phi((1,)) == ()

    def test_inverse_running_example(self):
        assert phi_inv(perm_from_text("57341286")) == perm_from_text("684512937")

    def test_inverse_small(self):
        assert phi_inv(perm_from_text("231")) == perm_from_text("3412")

    def test_inverse_of_empty(self):
        assert phi_inv(()) == (1,)

    def test_round_trip_exhaustive(self):
        for n in range(1, 7):
            for p in iter_family("andre", n):
                assert phi_inv(phi(p)) == p

    def test_precondition(self):
        with pytest.raises(ValueError):
            phi((4, 3, 5, 1, 2))
        with pytest.raises(ValueError):
            phi_inv((3, 2, 1))


class TestPsi:
    def test_running_example(self):
        tree, trace = psi_c(perm_from_text("739154826"))
        assert tree == RUNNING_TREE
        assert pleaf(tree) == 7

    def test_two_element(self):
        assert psi((2, 1)) == tree_from_literal("1(2)")
        assert psi((1,)) == tree_from_literal("1")

    def test_grafting_trace(self):
        _, trace = psi_c(perm_from_text("748591623"))
        got = [(s.index, s.a, s.b, s.case) for s in trace.steps]
        assert got == [
            (4, 3, 3, "C1"),
            (3, 2, 2, "C1"),
            (2, 9, None, "C2"),
            (1, 5, 5, "C1"),
        ]

    def test_trace_lines(self):
        _, trace = psi_c(perm_from_text("748591623"))
        assert trace.lines()[2] == "i=2 a=9 b=- case=C2"

    def test_pleaf_statistic_exhaustive(self):
        for n in range(1, 7):
            for p in iter_family("alt", n):
                assert pleaf(psi(p)) == p[0]

    def test_recursive_version_examples(self):
        assert psi_b(perm_from_text("2143")) == tree_from_literal("1(2,3(4))")
        assert psi_b(perm_from_text("4231")) == tree_from_literal("1(2(3(4)))")

    def test_two_algorithms_agree_exhaustively(self):
        for n in range(1, 8):
            for p in iter_family("alt", n):
                assert psi_b(p) == psi_c(p)[0]

    def test_inverse(self):
        assert psi_inv(RUNNING_TREE) == perm_from_text("739154826")
        assert psi_inv(tree_from_literal("1(2)")) == (2, 1)

    def test_inverse_round_trip_exhaustive(self):
        for n in range(1, 7):
            for p in iter_family("alt", n):
                assert psi_inv(psi(p)) == p

    def test_precondition(self):
        with pytest.raises(ValueError):
            psi_c((1, 2, 3))
        with pytest.raises(ValueError):
            psi_b((1, 2, 3))


class TestChainTables:
    def test_unsigned_chains(self):
        for alt, tree_lit, andre, simsun in CHAIN_TABLE:
            t = tree_from_literal(tree_lit)
            assert psi(perm_from_text(alt)) == t
            assert omega(t) == perm_from_text(andre)
            assert phi(perm_from_text(andre)) == perm_from_text(simsun)

    def test_signed_chains(self):
        for alt, tree_lit, andre in SIGNED_CHAIN_TABLE:
            t = tree_from_literal(tree_lit)
            assert psi_signed(perm_from_text(alt)) == t
            assert omega_signed(t) == perm_from_text(andre)

    def test_signed_shrink_column(self):
        for source, image in SIGNED_SHRINK_TABLE:
            assert phi_signed(perm_from_text(source)) == perm_from_text(image)


class TestSignedMaps:
    def test_psi_signed_running_example(self):
        p = perm_from_text("6 -3 9 -8 2 -1 7 -4 5")
        assert psi_signed(p) == SIGNED_TREE

    def test_psi_signed_singleton(self):
        assert psi_signed((1,)) == tree_from_literal("1")
        assert psi_signed((-1,)) == tree_from_literal("-1")

    def test_omega_signed_running_example(self):
        assert omega_signed(SIGNED_TREE) == perm_from_text("5 7 -1 2 -8 -4 9 -3 6")

    def test_omega_signed_singleton(self):
        assert omega_signed(tree_from_literal("-1")) == (-1,)

    def test_phi_signed_singleton(self):
        assert phi_signed((1,)) == ()

    def test_phi_signed_statistic_exhaustive(self):
        for n in range(2, 6):
            for p in iter_family("andre-h", n):
                image = phi_signed(p)
                assert image[-1] == p[-1] - 1

    def test_preconditions(self):
        with pytest.raises(ValueError):
            psi_signed((1, 2))
        with pytest.raises(ValueError):
            phi_signed((-1, 2))


class TestChuangPhi:
    def test_running_example(self):
        assert chuang_phi(RUNNING_TREE) == perm_from_text("57341286")

    def test_single_node(self):
        assert chuang_phi(tree_from_literal("1")) == ()

    def test_factorization_exhaustive(self):
        for n in range(1, 8):
            for t in iter_family("tree", n):
                assert chuang_phi(t) == phi(omega(t))
