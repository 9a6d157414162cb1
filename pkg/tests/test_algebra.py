from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from kacpal.algebra import (
    AlgebraElement,
    CycMatrix,
    DEFAULT_RANK_CAP,
    CapExceededError,
    lambda_idempotent,
    left_ideal_dimension,
    rank,
    s_element,
    sandwich_dimension,
    verify_defining_relations,
    x_element,
    x_monomial,
    y_element,
    y_inverse_element,
    z_element,
    z_square_rhs,
)
from kacpal.cyclotomic import CycNumber, zeta_power
from kacpal.wreath import group_order


def one(n, m):
    return AlgebraElement.one(n, m)


def test_unit_laws():
    n, m = 2, 3
    z1 = z_element(n, m, 1)
    assert one(n, m) * z1 == z1
    assert z1 * one(n, m) == z1


def test_x_relations_explicit():
    n, m = 3, 2
    for i in (1, 2):
        assert x_element(n, m, i) ** n == one(n, m)
    assert x_element(n, m, 1) * x_element(n, m, 2) == x_element(n, m, 2) * x_element(n, m, 1)


def test_x_monomial_is_product_of_generators():
    n, m = 3, 3
    mono = x_monomial(n, m, (2, 0, 1))
    built = (x_element(n, m, 1) ** 2) * x_element(n, m, 3)
    assert mono == built


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3)])
def test_lambda_family_complete_orthogonal_idempotents(n, m):
    total = AlgebraElement.zero(n, m)
    lams = list(product(range(n), repeat=m))
    idems = {lam: lambda_idempotent(n, m, lam) for lam in lams}
    for lam, e in idems.items():
        assert e * e == e
        total = total + e
    assert total == one(n, m)
    for lam in lams:
        for mu in lams:
            if lam != mu:
                assert (idems[lam] * idems[mu]).is_zero()


def test_x_eigenvalue_on_lambda():
    n, m = 2, 2
    for lam in product(range(n), repeat=m):
        e = lambda_idempotent(n, m, lam)
        for i in (1, 2):
            scalar = zeta_power(2 * n, -2 * lam[i - 1])
            assert x_element(n, m, i) * e == e.scale(scalar)


def test_lambda_central_among_x_monomials():
    n, m = 3, 2
    e = lambda_idempotent(n, m, (1, 2))
    for exps in product(range(n), repeat=m):
        mono = x_monomial(n, m, exps)
        assert mono * e == e * mono


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_y_order_exactly_2n(n, m):
    for l in range(1, m):
        y = y_element(n, m, l)
        acc = one(n, m)
        for k in range(1, 2 * n + 1):
            acc = acc * y
            if k < 2 * n:
                assert acc != one(n, m)
        assert acc == one(n, m)


def test_y_inverse_is_inverse():
    n, m = 3, 2
    assert y_element(n, m, 1) * y_inverse_element(n, m, 1) == one(n, m)


def test_z_square_identities():
    n, m = 2, 3
    for l in (1, 2):
        z_sq = z_element(n, m, l) ** 2
        assert z_sq == y_inverse_element(n, m, l) ** 2
        assert z_sq == z_square_rhs(n, m, l)


def test_z_square_one_based_range_fails():
    # the same sum started at 1 instead of 0 does not give z^2
    n, m = 2, 2
    order = 2 * n
    acc = AlgebraElement.zero(n, m)
    norm = CycNumber.from_rational(order, Fraction(1, n))
    for i in range(1, n):
        for j in range(1, n):
            acc = acc + x_monomial(n, m, (i, j)).scale(zeta_power(order, -2 * i * j) * norm)
    assert acc != z_element(n, m, 1) ** 2


def test_z_intertwines_lambda():
    n, m = 2, 3
    for l in (1, 2):
        z = z_element(n, m, l)
        for lam in product(range(n), repeat=m):
            sigma_lam = list(lam)
            sigma_lam[l - 1], sigma_lam[l] = sigma_lam[l], sigma_lam[l - 1]
            lhs = z * lambda_idempotent(n, m, lam)
            rhs = lambda_idempotent(n, m, tuple(sigma_lam)) * z
            assert lhs == rhs


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2)])
def test_defining_relations_all_pass(n, m):
    report = verify_defining_relations(n, m)
    assert report["all_pass"]
    for family, entry in report["relations"].items():
        assert entry["status"] == "pass", family
    assert any("0" in note for note in report["notes"])


def test_relation_suite_expected_families():
    report = verify_defining_relations(2, 2)
    assert set(report["relations"]) == {
        "x_power",
        "x_commute",
        "zx",
        "z_commute",
        "z_braid",
        "z_square",
        "z_square_y",
        "z_lambda",
        "s_square",
        "s_commute",
        "s_braid",
        "sx",
        "s_from_y_z",
        "y_order",
    }


def test_relation_suite_cap():
    with pytest.raises(CapExceededError):
        verify_defining_relations(2, 6, cap=10000)


def test_perturbed_y_breaks_braid():
    # negative control: drop one character term from y_1, the braid fails
    n, m = 2, 3
    lam_star = (1, 1, 0)
    dropped = lambda_idempotent(n, m, lam_star).scale(
        zeta_power(2 * n, -lam_star[0] * lam_star[1])
    )
    s_tilde = (y_element(n, m, 1) - dropped) * z_element(n, m, 1)
    s2 = s_element(n, m, 2)
    assert s_tilde * s2 * s_tilde != s2 * s_tilde * s2


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_convolution_associativity(data):
    n, m = 2, 2
    order = group_order(n, m)

    def sparse():
        size = data.draw(st.integers(1, 3))
        terms = {}
        for _ in range(size):
            ix = data.draw(st.integers(0, order - 1))
            coeff = zeta_power(2 * n, data.draw(st.integers(0, 2 * n - 1)))
            num = data.draw(st.integers(-3, 3))
            terms[ix] = coeff * CycNumber.from_rational(2 * n, num)
        return AlgebraElement(n, m, terms)

    a, b, c = sparse(), sparse(), sparse()
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_parameter_mismatch():
    with pytest.raises(ValueError):
        one(2, 2) * one(2, 3)
    with pytest.raises(ValueError):
        one(2, 2) + one(3, 2)


def test_coefficient_order_validated():
    with pytest.raises(ValueError):
        AlgebraElement(2, 2, {0: CycNumber.one(6)})
    with pytest.raises(ValueError):
        AlgebraElement(2, 2, {99: CycNumber.one(4)})


def test_matrix_rank_examples():
    order = 4
    eye = CycMatrix(
        3,
        3,
        [
            [CycNumber.from_rational(order, 1 if i == j else 0) for j in range(3)]
            for i in range(3)
        ],
    )
    assert rank(eye) == 3
    zero = CycMatrix(2, 3, [[CycNumber.zero(order)] * 3 for _ in range(2)])
    assert rank(zero) == 0
    # dependent columns
    dep = CycMatrix(
        2,
        2,
        [
            [CycNumber.from_rational(order, 1), CycNumber.from_rational(order, 2)],
            [CycNumber.from_rational(order, 3), CycNumber.from_rational(order, 6)],
        ],
    )
    assert rank(dep) == 1
    assert dep.rank() == 1


def test_matrix_of_lambda_translates_has_rank_m_factorial():
    n, m = 2, 2
    e = lambda_idempotent(n, m, (0, 1))
    cols = []
    from kacpal.wreath import mul_row

    for g in range(group_order(n, m)):
        row = mul_row(n, m, g)
        cols.append({row[h]: c for h, c in e.terms.items()})
    mat = CycMatrix.from_columns(group_order(n, m), cols, 2 * n)
    assert rank(mat) == 2


def test_left_ideal_dimension_whole_algebra():
    for n, m in [(2, 2), (3, 2)]:
        assert left_ideal_dimension(one(n, m)) == group_order(n, m)


def test_left_ideal_dimension_of_lambda():
    n, m = 2, 3
    for lam in [(0, 0, 0), (0, 0, 1), (1, 1, 1)]:
        assert left_ideal_dimension(lambda_idempotent(n, m, lam)) == 6


def test_left_ideal_complement():
    n, m = 2, 2
    e = lambda_idempotent(n, m, (0, 1))
    assert (
        left_ideal_dimension(e) + left_ideal_dimension(one(n, m) - e)
        == group_order(n, m)
    )


def test_sandwich_dimension_whole_algebra():
    n, m = 2, 2
    assert sandwich_dimension(one(n, m), one(n, m)) == group_order(n, m)


def test_rank_cap():
    with pytest.raises(CapExceededError):
        left_ideal_dimension(one(2, 5), cap=DEFAULT_RANK_CAP)
    with pytest.raises(CapExceededError):
        sandwich_dimension(one(2, 5), one(2, 5), cap=DEFAULT_RANK_CAP)


def test_element_json_round_trip():
    n, m = 2, 3
    e = z_element(n, m, 1) * lambda_idempotent(n, m, (0, 1, 0))
    data = e.to_json()
    assert AlgebraElement.from_json(data) == e
    indices = [item["index"] for item in data["terms"]]
    assert indices == sorted(indices)
