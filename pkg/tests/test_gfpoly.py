import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equidiff.errors import FieldMismatchError
from equidiff.gfpoly import NEG_INF, GF, Matrix, Polynomial, find_modulus, poly_gcd

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def naive_mul(F, a, b):
    """Schoolbook product of digit vectors reduced by the modulus, no tables."""
    p, m, mod = F.p, F.m, F.modulus
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] += x * y
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        for i in range(m + 1):
            prod[k - m + i] -= c * mod[i]
    return sum((prod[i] % p) * p**i for i in range(m))


def test_mul_in_f5():
    F = GF(5)
    assert F(3) * F(4) == F(2)
    assert (3 * 4) % 5 == 2


def test_sub_self_is_zero():
    for p, m in SMALL_FIELDS:
        F = GF(p, m)
        for a in F:
            assert a - a == F.zero


def test_f9_modulus_and_u_squared():
    F = GF(3, 2)
    assert F.modulus == (1, 0, 1)  # u^2 + 1
    u = F(3)
    assert u * u == F(2)


def test_moduli_are_first_irreducible():
    assert find_modulus(2, 2) == (1, 1, 1)
    assert find_modulus(2, 3) == (1, 1, 0, 1)
    assert find_modulus(5, 2) == (2, 0, 1)


@pytest.mark.parametrize("p,m", SMALL_FIELDS + [(2, 4), (5, 2), (3, 3)])
def test_table_mul_matches_schoolbook(p, m):
    F = GF(p, m)
    for a in range(F.q):
        for b in range(F.q):
            assert (F(a) * F(b)).value == naive_mul(F, a, b)


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    F = GF(p, m)
    els = list(F)
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        if b:
            assert (a / b) * b == a
    for a in els:
        assert a + F.zero == a and a * F.one == a
        total = F.zero
        for _ in range(p):
            total = total + a
        assert total == F.zero


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(7)(3) / GF(7)(0)
    with pytest.raises(ZeroDivisionError):
        GF(3, 2)(4) / GF(3, 2).zero


def test_mismatched_fields():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        Polynomial(GF(5), [1, 1]) * Polynomial(GF(7), [1])


def test_canonical_representation():
    F = GF(3, 2)
    assert len({a.value for a in F}) == 9
    assert F(5) == GF(3, 2)(5)
    with pytest.raises(ValueError):
        F(9)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (3, 3), (5, 2), (7, 1)])
def test_frobenius_root_exhaustive(p, m):
    F = GF(p, m)
    for c in F:
        d = F.frobenius_root(c)
        assert d**p == c
        assert [x for x in F if x**p == c] == [d]


def test_frobenius_root_examples():
    assert GF(3).frobenius_root(GF(3)(2)) == GF(3)(2)
    F = GF(3, 2)
    u = F(3)
    d = F.frobenius_root(u)
    assert d == u**3
    assert d**3 == u
    assert F.frobenius_root(F.zero) == F.zero


def test_primitive_roots_f7():
    F = GF(7)
    assert F.primitive_root_of_unity(2) == F(6)
    z3 = F.primitive_root_of_unity(3)
    order3 = [a for a in F if a and a**3 == F.one and a != F.one]
    assert z3 in order3 and sorted(a.value for a in order3) == [2, 4]
    assert F.primitive_root_of_unity(1) == F.one


@pytest.mark.parametrize("p,m", [(7, 1), (5, 2), (2, 4), (3, 2), (2, 3)])
def test_primitive_roots_have_exact_order(p, m):
    F = GF(p, m)
    for n in range(1, F.q):
        if (F.q - 1) % n:
            with pytest.raises(ValueError, match="enlarge m"):
                F.primitive_root_of_unity(n)
            continue
        z = F.primitive_root_of_unity(n)
        assert z**n == F.one
        assert all(z**d != F.one for d in range(1, n))
        assert z.multiplicative_order() == n


# -- polynomials


def test_poly_product_f2():
    F = GF(2)
    x = Polynomial.x(F)
    assert (x**2 + 1) * (x + 1) == Polynomial(F, [1, 1, 1, 1])


def test_poly_add_zero_and_degree():
    F = GF(5)
    f = Polynomial(F, [1, 2, 3])
    zero = Polynomial(F)
    assert f + zero == f
    assert zero.degree == NEG_INF
    assert not isinstance(zero.degree, int)
    assert Polynomial(F, [1, 2, 0, 0]).degree == 1


def test_poly_eval():
    F = GF(7)
    assert Polynomial.monomial(F, 1, 3)(2) == F(1)


def test_divmod_by_zero():
    F = GF(3)
    with pytest.raises(ZeroDivisionError):
        divmod(Polynomial(F, [1, 1]), Polynomial(F))


def schoolbook(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Polynomial(F, [c % F.p for c in out])


coeff_lists = st.lists(st.integers(0, 6), min_size=0, max_size=8)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_mul_matches_schoolbook_f7(a, b):
    F = GF(7)
    if a and b:
        assert Polynomial(F, a) * Polynomial(F, b) == schoolbook(F, a, b)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 8), max_size=9), st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_divmod_round_trip_f9(a, b):
    F = GF(3, 2)
    f, g = Polynomial(F, a), Polynomial(F, b)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_and_squarefree():
    F = GF(5)
    x = Polynomial.x(F)
    assert poly_gcd((x - 1) * (x - 2), (x - 2) * (x - 3)) == x - 2
    assert not (x**5 + 1).is_squarefree()  # (x + 1)^5 in characteristic 5
    assert (x**5 - x + 1).is_squarefree()
    assert not ((x - 1) ** 2 * (x + 1)).is_squarefree()


def test_valuation_at_roots():
    F = GF(5)
    x = Polynomial.x(F)
    f = (x - 1) ** 3 * (x + 2)
    assert f.valuation_at(F(1)) == 3
    assert f.valuation_at(F(3)) == 1
    assert f.valuation_at(F(0)) == 0


# -- matrices


def brute_fixed_count(M):
    F = M.field
    return sum(1 for v in itertools.product(list(F), repeat=M.ncols) if M.apply(v) == tuple(v))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.data())
def test_nullspace_dim_matches_enumeration(n, data):
    F = GF(3)
    rows = data.draw(st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=n, max_size=n))
    M = Matrix(F, rows, ncols=n)
    kernel = (M - Matrix.identity(F, n)).nullspace()
    assert 3 ** len(kernel) == brute_fixed_count(M)
    for v in kernel:
        assert M.apply(v) == v


def test_matrix_power_and_identity():
    F = GF(3)
    J = Matrix(F, [[1, 1], [0, 1]])
    assert J**3 == Matrix.identity(F, 2)
    assert not (J**2).is_identity()
    assert Matrix.identity(F, 0).is_identity()
    assert Matrix(F, [[2, 0], [0, 1]]).is_diagonal()
