import json
import random
from fractions import Fraction

import pytest

from kzforms.forms import abar
from kzforms.quasimodular import (
    EisensteinDecomposition,
    EisensteinMonomial,
    NotInSpan,
    SingularSystem,
    coefficient_matrix,
    decompose,
    eisenstein,
    matrix_rank,
    monomial_basis,
    monomial_series,
    reduce_decomposition_mod,
    solve_exact,
    substitute_mod,
)
from kzforms.series import QSeries

M = EisensteinMonomial

ABAR2_PRINTED = {
    M(6, 0, 0): -875,
    M(4, 1, 0): 2220,
    M(2, 2, 0): -1791,
    M(0, 3, 0): 1050,
    M(3, 0, 1): 580,
    M(1, 1, 1): -1788,
    M(0, 0, 2): 604,
}


def sigma_brute(k, m):
    return sum(d**k for d in range(1, m + 1) if m % d == 0)


def test_e4_order_3():
    assert sigma_brute(3, 1) == 1 and sigma_brute(3, 2) == 9
    assert eisenstein(4, 3) == QSeries.from_list([1, 240, 2160])


def test_e2_order_2():
    assert eisenstein(2, 2) == QSeries.from_list([1, -24])


@pytest.mark.parametrize("k, const", [(2, -24), (4, 240), (6, -504)])
def test_eisenstein_against_divisor_oracle(k, const):
    f = eisenstein(k, 40)
    assert f.coefficient_list() == [1] + [const * sigma_brute(k - 1, m) for m in range(1, 40)]


def test_eisenstein_mod_5():
    e2, e4, e6 = (eisenstein(k, 40).coefficient_list() for k in (2, 4, 6))
    assert all(c % 5 == (1 if i == 0 else 0) for i, c in enumerate(e4))
    assert all((a - b) % 5 == 0 for a, b in zip(e6, e2))


def test_eisenstein_rejects_other_weights():
    with pytest.raises(ValueError):
        eisenstein(8, 5)


def brute_triples(weight):
    return {(a, b, c) for a in range(weight + 1) for b in range(weight + 1) for c in range(weight + 1) if 2 * a + 4 * b + 6 * c == weight}


def test_basis_weight_12():
    basis = monomial_basis(12)
    assert set(basis) == set(ABAR2_PRINTED)
    assert basis == sorted(basis, reverse=True)


def test_basis_small_and_24():
    assert monomial_basis(2) == [M(1, 0, 0)]
    assert len(brute_triples(24)) == 19
    assert set(monomial_basis(24)) == brute_triples(24)
    for w in range(2, 40, 2):
        assert len(monomial_basis(w)) == len(brute_triples(w))
        assert all(m.weight == w for m in monomial_basis(w))


def test_basis_rejects_odd_weight():
    with pytest.raises(ValueError):
        monomial_basis(7)


@pytest.mark.parametrize("weight", range(2, 26, 2))
def test_coefficient_matrix_full_rank(weight):
    basis = monomial_basis(weight)
    assert matrix_rank(coefficient_matrix(basis, len(basis))) == len(basis)


def test_decompose_abar2_printed():
    d = decompose(abar(2, 30).series, 12)
    assert d.denominator() == 447897600
    assert d.numerators() == ABAR2_PRINTED


def test_decompose_abar4_spot_checks():
    d = decompose(abar(4, 40).series, 24)
    assert d.denominator() == 60183678025728000
    nums = d.numerators()
    assert nums[M(12, 0, 0)] == -7072690625
    assert nums[M(0, 0, 4)] == 17175744112
    assert len(nums) == 19


def test_decompose_basis_element():
    d = decompose(monomial_series(M(0, 3, 0), 12), 12)
    assert d.nonzero_terms() == {M(0, 3, 0): 1}


@pytest.mark.parametrize("weight", [4, 8, 12, 18])
def test_decompose_round_trip_random(weight):
    rng = random.Random(weight)
    basis = monomial_basis(weight)
    coeffs = {m: Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for m in basis}
    order = 3 * len(basis) + 2
    f = EisensteinDecomposition(weight, coeffs).evaluate(order)
    assert decompose(f, weight).terms == coeffs


def test_decompose_zero_series_is_unique():
    d = decompose(QSeries.zero(20), 12)
    assert all(c == 0 for c in d.terms.values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_abar_in_weight_6n_span(n):
    basis = monomial_basis(6 * n)
    f = abar(n, 3 * len(basis)).series
    d = decompose(f, 6 * n)
    assert d.evaluate(3 * len(basis)) == f


def test_not_in_span():
    with pytest.raises(NotInSpan):
        decompose(abar(2, 30).series, 10)
    with pytest.raises(NotInSpan):
        decompose(abar(2, 40).series - abar(4, 40).series, 24)


def test_singular_system():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(SingularSystem):
        solve_exact(rows, [Fraction(1), Fraction(2)])


def test_decompose_needs_margin():
    with pytest.raises(ValueError):
        decompose(abar(4, 20).series, 24)


PRINTED_MOD5 = {M(4, 4, 0): 2, M(3, 3, 1): 2, M(2, 2, 2): 2, M(1, 1, 3): 2, M(0, 0, 4): 2}


def test_mod5_reduction_of_difference():
    d2 = decompose(abar(2, 30).series, 12)
    d4 = decompose(abar(4, 40).series, 24)
    red = reduce_decomposition_mod(d2 - d4, 5)
    assert red.nonzero_terms() == PRINTED_MOD5
    # leading-coefficient sign normalization makes the order of subtraction irrelevant
    assert reduce_decomposition_mod(d4 - d2, 5).nonzero_terms() == PRINTED_MOD5
    assert substitute_mod(red, e4=1, e6_to_e2=True) == {}


def test_mod5_reduction_via_mixed_weight_decompose():
    f = abar(2, 40).series - abar(4, 40).series
    d = decompose(f, [12, 24])
    assert reduce_decomposition_mod(d, 5).nonzero_terms() == PRINTED_MOD5


def test_reduce_zero_decomposition():
    zero = EisensteinDecomposition(12, {m: Fraction(0) for m in monomial_basis(12)})
    assert reduce_decomposition_mod(zero, 5).is_zero()


def test_reduce_without_renormalizing():
    d = EisensteinDecomposition(4, {M(2, 0, 0): Fraction(3, 7), M(0, 1, 0): Fraction(1, 2)})
    red = reduce_decomposition_mod(d, 5, renormalize=False)
    assert red.terms == {M(2, 0, 0): 3 * pow(7, -1, 5) % 5, M(0, 1, 0): pow(2, -1, 5)}
    with pytest.raises(ValueError):
        reduce_decomposition_mod(EisensteinDecomposition(2, {M(1, 0, 0): Fraction(1, 5)}), 5, renormalize=False)


def test_decomposition_json_round_trip():
    d = decompose(abar(2, 30).series, 12)
    obj = json.loads(json.dumps(d.to_json()))
    assert obj["weight"] == 12
    assert obj["denominator"] == "447897600"
    assert [(t["a"], t["b"], t["c"]) for t in obj["terms"]] == [tuple(m) for m in monomial_basis(12)]
    assert EisensteinDecomposition.from_json(obj) == d
