import pytest

from taftgreen.errors import InvalidArgumentError, InvalidOrderError
from taftgreen.taft import (
    TaftElement,
    TaftTensorElement,
    antipode,
    coproduct,
    counit,
    idempotent,
    ideal_power_dimension,
    multiplication_table,
    q_powers,
)

T = TaftElement


def mono(n, i, j, c=1):
    return T.monomial(n, i, j, c)


@pytest.fixture(params=[2, 3, 4, 5])
def n(request):
    return request.param


def test_commutation(n):
    q = q_powers(n)[1]
    assert T.h(n) * T.g(n) == (T.g(n) * T.h(n)).scale(q)


def test_group_like_order(n):
    assert mono(n, n - 1, 0) * T.g(n) == T.one(n)


def test_h_nilpotent(n):
    assert (mono(n, 0, n - 1) * T.h(n)).is_zero()
    assert not (T.h(n) ** (n - 1)).is_zero()


def test_monomials_are_independent(n):
    basis = T.basis(n)
    assert len(basis) == n * n
    assert len({next(iter(b.coeffs)) for b in basis}) == n * n


def test_order_mismatch():
    with pytest.raises(InvalidArgumentError):
        T.g(3) * T.g(4)
    with pytest.raises(InvalidOrderError):
        T.one(1)


def test_coproduct_generators(n):
    g, h, one = T.g(n), T.h(n), T.one(n)
    assert coproduct(g) == TaftTensorElement.pure(g, g)
    assert coproduct(h) == TaftTensorElement.pure(one, h) + TaftTensorElement.pure(h, g)
    assert coproduct(one) == TaftTensorElement.pure(one, one)


def test_counit_values(n):
    for i in range(n):
        assert counit(mono(n, i, 0)) == 1
        for j in range(1, n):
            assert counit(mono(n, i, j)).is_zero()


def test_antipode_generators(n):
    q_inv = q_powers(n)[n - 1]
    assert antipode(T.g(n)) == mono(n, n - 1, 0)
    assert antipode(T.h(n)) == mono(n, n - 1, 1, -q_inv)


def test_idempotents(n):
    q = q_powers(n)
    es = [idempotent(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert es[i] * es[j] == (es[i] if i == j else T.zero(n))
    total = T.zero(n)
    for e in es:
        total = total + e
    assert total == T.one(n)
    for i in range(n):
        assert T.g(n) * es[i] == es[i].scale(q[i])
        assert not (T.h(n) ** (n - 1) * es[i]).is_zero()


def test_idempotent_range():
    with pytest.raises(InvalidArgumentError):
        idempotent(3, 3)


def test_sweedler_signs():
    # n = 2: q = -1, S(h) = g h, and (gh)^2 = 0
    g, h = T.g(2), T.h(2)
    assert antipode(h) == g * h
    assert (g * h) * (g * h) == T.zero(2)


def test_radical_powers(n):
    assert ideal_power_dimension(n, n - 1) > 0
    assert ideal_power_dimension(n, n) == 0
    # J^s = H h^s has dimension n * (n - s)
    assert [ideal_power_dimension(n, s) for s in range(n + 1)] == [n * (n - s) for s in range(n + 1)]


def test_multiplication_table_shape():
    table = multiplication_table(3)
    assert len(table) == 9 and all(len(row) == 9 for row in table)
    assert table[1][3] == mono(3, 1, 1, q_powers(3)[1])  # h * g = q g h


class TestHopfAxioms:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_all_basis_monomials(self, n):
        one = T.one(n)

        def delta(m):
            return coproduct(mono(n, *m))

        def eps(m):
            return counit(mono(n, *m))

        def s(m):
            return antipode(mono(n, *m))

        for b in T.basis(n):
            d = coproduct(b)
            assert d.map_leg(0, delta) == d.map_leg(1, delta)
            assert d.map_leg(0, eps).as_element() == b
            assert d.map_leg(1, eps).as_element() == b
            unit = one.scale(counit(b))
            assert d.map_leg(0, s).multiply_legs() == unit
            assert d.map_leg(1, s).multiply_legs() == unit

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_structure_maps_respect_products(self, n):
        basis = T.basis(n)
        for a in basis:
            for b in basis:
                assert coproduct(a * b) == coproduct(a) * coproduct(b)
                assert counit(a * b) == counit(a) * counit(b)
                assert antipode(a * b) == antipode(b) * antipode(a)
