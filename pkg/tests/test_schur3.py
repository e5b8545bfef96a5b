"""Schur polynomials, straightening, decomposition, Adams plethysm."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl3jones.schur3 import (NotSymmetricError, adams, decompose_schur,
                             generic_row_at_m2_one, is_symmetric, mul_sym,
                             p_one, p_zero, psi_oracle, schur, straighten,
                             verify_lemma_LR, verify_lemma_psi2_recurrence)
from sl3jones.sl3rep import SignedWeightSum, dimension

partitions = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)) \
    .map(lambda t: tuple(sorted(t, reverse=True)))


# -- schur basics ---------------------------------------------------------


def test_schur_fundamental():
    assert schur((1, 0, 0)) == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}


def test_schur_trivial():
    assert schur((0, 0, 0)) == p_one()


def test_schur_complete_and_elementary():
    # s_(2,0,0) is the complete homogeneous h_2, s_(1,1,0) the elementary e_2
    h2 = {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1,
          (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    e2 = {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert schur((2, 0, 0)) == h2
    assert schur((1, 1, 0)) == e2


def test_schur_determinant_column():
    # adding a full column multiplies by x1 x2 x3
    s = schur((2, 1, 0))
    shifted = {(a + 1, b + 1, c + 1): v for (a, b, c), v in s.items()}
    assert schur((3, 2, 1)) == shifted


def test_schur_dimension_specialization():
    for lam in ((1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0)):
        w = (lam[0] - lam[1], lam[1] - lam[2])
        assert sum(schur(lam).values()) == dimension(w)


def test_schur_bad_index():
    with pytest.raises(TypeError):
        schur((1, 0))
    with pytest.raises(ValueError):
        schur((-3, 0, 0))


# -- straightening --------------------------------------------------------


def test_straighten_examples():
    assert straighten((2, 1, 0)) == (1, (2, 1, 0))
    # swapping adjacent entries a, b -> (b-1, a+1) with a sign
    assert straighten((1, 3, 0)) == (-1, (2, 2, 0))
    assert straighten((0, 1, 0)) is None
    assert straighten((3, -1, 0)) is None


@settings(max_examples=80)
@given(st.tuples(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7)))
def test_straighten_matches_alternant(lam):
    st_ = straighten(lam)
    if st_ is None:
        assert schur(lam) == p_zero()
    else:
        sign, part = st_
        got = schur(lam)
        expect = {m: sign * c for m, c in schur(part).items()}
        assert got == expect


# -- symmetry and decomposition -------------------------------------------


def test_is_symmetric():
    assert is_symmetric(schur((3, 1, 0)))
    assert not is_symmetric({(1, 0, 0): 1})
    assert is_symmetric(p_zero())


def test_decompose_zero_and_one():
    assert decompose_schur(p_zero()) == {}
    assert decompose_schur(p_one()) == {(0, 0, 0): 1}


def test_decompose_rejects_non_symmetric():
    with pytest.raises(NotSymmetricError):
        decompose_schur({(1, 0, 0): 1})


@settings(max_examples=40, deadline=None)
@given(partitions, partitions)
def test_decompose_product_round_trip(lam, mu):
    prod = mul_sym(schur(lam), schur(mu))
    expansion = decompose_schur(prod)
    # multiplicities are nonnegative for a product of Schur polynomials
    assert all(c > 0 for c in expansion.values())
    rebuilt = p_zero()
    for nu, c in expansion.items():
        for mono, sc in schur(nu).items():
            rebuilt[mono] = rebuilt.get(mono, 0) + c * sc
    rebuilt = {m: c for m, c in rebuilt.items() if c}
    assert rebuilt == prod


def test_mul_identity():
    f = schur((2, 1, 0))
    assert mul_sym(f, p_one()) == f


# -- adams operations -------------------------------------------------------


def test_adams_degree_one_is_identity():
    f = schur((2, 1, 0))
    assert adams(f, 1) == f


def test_adams_is_ring_map():
    f, g = schur((1, 0, 0)), schur((1, 1, 0))
    assert adams(mul_sym(f, g), 2) == mul_sym(adams(f, 2), adams(g, 2))


def test_adams_rejects_bad_degree():
    with pytest.raises(ValueError):
        adams(p_one(), 0)


def test_psi_oracle_trivial():
    for a in (1, 2, 3):
        assert psi_oracle((0, 0), a) == SignedWeightSum({(0, 0): 1})


def test_psi_oracle_fundamental_square():
    # second Adams image of the one-row character s_m is the signed
    # hook sum over s_{2m-k, k}; at m = 1 that is s_2 - s_{1,1}
    assert psi_oracle((1, 0), 2) == SignedWeightSum({(2, 0): 1, (0, 1): -1})


def test_psi_oracle_one_row_hooks():
    for m in range(1, 7):
        got = decompose_schur(adams(schur((m, 0, 0)), 2))
        expect = {}
        for k in range(m + 1):
            st_ = straighten((2 * m - k, k, 0))
            if st_ is None:
                continue
            sign, part = st_
            expect[part] = expect.get(part, 0) + sign * (-1 if k % 2 else 1)
        expect = {p: c for p, c in expect.items() if c}
        assert got == expect, m


def test_psi_oracle_adjoint():
    got = psi_oracle((1, 1), 2)
    assert got == SignedWeightSum({(2, 2): 1, (0, 3): -1, (3, 0): -1, (0, 0): 1})
    # signed classical dimensions: 27 - 10 - 10 + 1 = 8
    assert sum(c * dimension(w) for w, c in got.items()) == 8


def test_psi_oracle_signed_dimension_conservation():
    for m1 in range(5):
        for m2 in range(5):
            for a in (2, 3):
                s = psi_oracle((m1, m2), a)
                total = sum(c * dimension(w) for w, c in s.items())
                assert total == dimension((m1, m2)), (m1, m2, a)


def test_psi_oracle_degree_two_multiplicities_unit():
    for m1 in range(7):
        for m2 in range(7):
            s = psi_oracle((m1, m2), 2)
            assert all(c in (-1, 1) for _, c in s.items()), (m1, m2)


# -- identity harnesses -----------------------------------------------------


def test_lemma_LR_cases():
    assert verify_lemma_LR(5, 2)   # generic row
    assert verify_lemma_LR(4, 4)   # equal rows
    assert verify_lemma_LR(6, 1)   # one-box second row
    assert verify_lemma_LR(5, 0)   # one-row case
    assert verify_lemma_LR(0, 0)
    assert verify_lemma_LR(1, 1)
    assert verify_lemma_LR(2, 1)


def test_lemma_LR_range():
    for m1 in range(9):
        for m2 in range(m1 + 1):
            assert verify_lemma_LR(m1, m2), (m1, m2)


def test_lemma_LR_rejects_non_partition():
    with pytest.raises(ValueError):
        verify_lemma_LR(1, 2)


def test_psi2_recurrence_cases():
    assert verify_lemma_psi2_recurrence(3, 1)
    assert verify_lemma_psi2_recurrence(5, 0)
    assert verify_lemma_psi2_recurrence(6, 2)


def test_psi2_recurrence_range():
    for m1 in range(1, 8):
        for m2 in range(m1):
            assert verify_lemma_psi2_recurrence(m1, m2), (m1, m2)


def test_psi2_recurrence_precondition():
    with pytest.raises(ValueError):
        verify_lemma_psi2_recurrence(2, 2)


def test_generic_row_probe_at_m2_one():
    # observation only: the generic product rows keep holding at m2 = 1
    # once out-of-range labels straighten; recorded, not load-bearing
    results = [generic_row_at_m2_one(m1) for m1 in range(2, 11)]
    print("generic rows at m2=1 hold on 2..10:", all(results))
