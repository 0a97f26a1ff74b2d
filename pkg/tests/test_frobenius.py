from fractions import Fraction

import pytest

from detrep import (EquivalenceCertificate, LinFormMatrix, coefficient_slices, express_in_entry_basis,
                    frobenius_decompose, gen_frobenius_instance, rank1_factor, verify_certificate)
from detrep.algebra import identity, matrix
from detrep.errors import BothBranchesSucceed, NotEquivalent, NotInSpan, RankNotOne
from detrep.generators import gen_random_pair

from oracles import bilinear_equivalence


def proportional(m1, m2):
    """Return lambda with m1 == lambda * m2, or None."""
    pairs = [(a, b) for r1, r2 in zip(m1, m2) for a, b in zip(r1, r2)]
    lam = next((a / b for a, b in pairs if b), None)
    if lam is None or any(a != lam * b for a, b in pairs):
        return None
    return lam


def test_express_identity_and_double():
    b = LinFormMatrix.coordinate(2)
    coords = express_in_entry_basis(b, b)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert coords[i][j][k][l] == (1 if (i, j) == (k, l) else 0)
    doubled = express_in_entry_basis(b.transform(matrix([[2, 0], [0, 2]]), identity(2)), b)
    assert doubled == tuple(tuple(tuple(tuple(2 * x for x in row) for row in blk) for blk in crow)
                            for crow in coords)


def test_express_not_in_span():
    b = LinFormMatrix.coordinate(2, 5)
    rows = [list(row) for row in b.entries]
    rows[1][0] = (0, 0, 0, 0, 1)
    with pytest.raises(NotInSpan):
        express_in_entry_basis(LinFormMatrix(rows), b)


def test_coefficient_slices():
    b = LinFormMatrix.coordinate(2)
    slices = coefficient_slices(express_in_entry_basis(b, b))
    assert [s.matrix for s in slices] == [((1, 0), (0, 0)), ((0, 0), (0, 1))]
    a, b, s0, t0 = gen_frobenius_instance(2, 9, seed=11)
    for sl in coefficient_slices(express_in_entry_basis(a, b)):
        expected = tuple(tuple(s0[i][sl.l] * t0[sl.l][j] for j in range(3)) for i in range(3))
        assert sl.matrix == expected
    a, b = gen_random_pair(2, 9, seed=5)
    with pytest.raises(NotEquivalent):
        frobenius_decompose(a, b)


def test_rank1_factor():
    p, q = rank1_factor(matrix([[1, 2], [2, 4]]))
    assert p == (1, 2) and q == (1, 2)
    with pytest.raises(RankNotOne):
        rank1_factor(matrix([[0, 0], [0, 0]]))
    with pytest.raises(RankNotOne):
        rank1_factor(matrix([[1, 2], [3, 4]]))


def test_decompose_identity_and_transpose():
    b = LinFormMatrix.coordinate(2)
    cert = frobenius_decompose(b, b)
    assert cert.S == identity(2) and cert.T == identity(2) and not cert.transposed and cert.c == 1
    b3 = LinFormMatrix.coordinate(3)
    cert = frobenius_decompose(b3.transpose(), b3)
    assert cert.S == identity(3) and cert.T == identity(3) and cert.transposed


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("transposed", [False, True])
def test_decompose_recovers_planted_factors(r, transposed):
    for seed in range(4):
        a, b, s0, t0 = gen_frobenius_instance(r, (r + 1) ** 2, transposed, seed=seed)
        cert = frobenius_decompose(a, b)
        assert cert.transposed == transposed
        assert verify_certificate(a, b, cert)
        lam = proportional(cert.S, s0)
        assert lam is not None and proportional(cert.T, t0) == 1 / lam


def test_decompose_with_extra_variables():
    a, b, _, _ = gen_frobenius_instance(1, 7, seed=3)
    assert verify_certificate(a, b, frobenius_decompose(a, b))


def test_verify_perturbed():
    b = LinFormMatrix.coordinate(2)
    good = EquivalenceCertificate(identity(2), identity(2), False, Fraction(1))
    assert verify_certificate(b, b, good)
    bad = EquivalenceCertificate(matrix([[1, 1], [0, 1]]), identity(2), False, Fraction(1))
    assert not verify_certificate(b, b, bad)


def test_refutation_agrees_with_bilinear_oracle():
    for seed in range(10):
        a, b = gen_random_pair(1, 4, seed=seed)
        with pytest.raises(NotEquivalent) as info:
            frobenius_decompose(a, b)
        assert info.value.witness is not None
        assert bilinear_equivalence(a, b, False) is None
        assert bilinear_equivalence(a, b, True) is None


def test_oracle_finds_planted_solution():
    a, b, s0, t0 = gen_frobenius_instance(1, 4, True, seed=9)
    assert bilinear_equivalence(a, b, True) is not None
    assert bilinear_equivalence(a, b, False) is None


def test_seed_does_not_change_certificate():
    a, b, _, _ = gen_frobenius_instance(2, 9, seed=21)
    assert frobenius_decompose(a, b, seed=0) == frobenius_decompose(a, b, seed=99)


def test_both_branches_error_is_invariant_violation():
    assert issubclass(BothBranchesSucceed, AssertionError)
