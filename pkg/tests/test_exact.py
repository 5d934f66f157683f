"""Kernel tests: resultants, factorization, root-of-unity orders, kernels."""

import random
from fractions import Fraction
from math import gcd

import pytest

from arithdyn.errors import InputError
from arithdyn.exact import (
    BinForm,
    QMatrix,
    QuadElem,
    UniPoly,
    cyclotomic_poly,
    factor_rational,
    form_gcd,
    invariant_kernel,
    is_irreducible,
    poly_gcd,
    poly_powmod,
    power_root_min_poly,
    rational_roots,
    resultant,
    root_of_unity_order,
    squarefree_decomposition,
    unity_root_records,
)


def P(*coeffs):
    return UniPoly(list(coeffs))


# ---------------------------------------------------------------------------
# resultants


def test_resultant_values():
    F = BinForm([1, 0, 1])   # X^2 + Y^2
    G = BinForm([1, 0, -1])  # X^2 - Y^2
    # Root-pair product: (i-1)(i+1)(-i-1)(-i+1) = 4.
    assert resultant(F, G) == 4
    assert resultant(BinForm([1, 0]), BinForm([0, 1])) == 1
    assert resultant(BinForm([1, 0, -1]), BinForm([0, 0, 1])) == 1


def test_resultant_degree_mismatch():
    with pytest.raises(InputError):
        resultant(BinForm([1, 0]), BinForm([1, 0, 0]))


def _random_form(rng, d):
    while True:
        coeffs = [rng.randint(-4, 4) for _ in range(d + 1)]
        if any(coeffs):
            return BinForm(coeffs, d)


def test_resultant_vanishes_iff_common_factor():
    rng = random.Random(7)
    for _ in range(500):
        d = rng.randint(1, 4)
        F = _random_form(rng, d)
        G = _random_form(rng, d)
        g = form_gcd(F, G)
        if resultant(F, G) == 0:
            assert g.degree >= 1
        else:
            assert g.degree == 0


def test_resultant_of_product_pair():
    # Multiplicativity sanity on a known pair.
    F = BinForm([2, 0])   # 2X
    G = BinForm([0, 1])   # Y
    assert resultant(F, G) == 2


# ---------------------------------------------------------------------------
# factorization


def test_factor_examples():
    fac = factor_rational(P(0, 0, -1, 1))  # x^3 - x^2
    assert fac == [(P(0, 1), 2), (P(-1, 1), 1)] or fac == sorted(
        fac, key=lambda fm: (fm[0].degree(), fm[0].int_coeffs())
    )
    assert (P(0, 1), 2) in fac and (P(-1, 1), 1) in fac and len(fac) == 2

    fac = factor_rational(P(-1, 0, 0, 0, 1))  # x^4 - 1
    assert fac == [(P(-1, 1), 1), (P(1, 1), 1), (P(1, 0, 1), 1)]

    fac = factor_rational(P(1, 1, 1))  # x^2 + x + 1
    assert fac == [(P(1, 1, 1), 1)]


def test_factor_zero_rejected():
    with pytest.raises(InputError):
        factor_rational(UniPoly.zero())


def test_factor_reassembly_random():
    rng = random.Random(3)
    for _ in range(60):
        p = P(1)
        for _ in range(rng.randint(1, 3)):
            q = P(*[rng.randint(-3, 3) for _ in range(rng.randint(2, 4))])
            if q.degree() >= 1:
                p = p * q
        if p.degree() < 1:
            continue
        fac = factor_rational(p)
        prod = UniPoly.one()
        for f, m in fac:
            prod = prod * f**m
        # Equal up to a rational constant.
        c = p.lc() / prod.lc()
        assert prod * c == p


def test_factor_bigger_products():
    p = P(1, 1, 1) * P(-1, 1) * P(2, 0, 1) * P(1, 1)
    fac = factor_rational(p)
    assert (P(1, 1, 1), 1) in fac
    assert (P(2, 0, 1), 1) in fac
    assert (P(-1, 1), 1) in fac
    assert (P(1, 1), 1) in fac
    # degree-6 squarefree product of two cubics
    a = P(-2, 0, 0, 1)  # x^3 - 2, irreducible
    b = P(1, 3, 0, 1)   # x^3 + 3x + 1, irreducible
    fac = factor_rational(a * b)
    assert sorted(f.int_coeffs() for f, _ in fac) == sorted(
        [a.int_coeffs(), b.int_coeffs()]
    )


def test_is_irreducible():
    assert is_irreducible(P(1, 1, 1))
    assert not is_irreducible(P(-1, 0, 1))
    assert is_irreducible(P(-2, 0, 1))


def test_squarefree_decomposition():
    p = P(-1, 1) ** 3 * P(1, 1) ** 1
    parts = dict()
    for g, m in squarefree_decomposition(p):
        parts[m] = g.int_coeffs()
    assert parts[3] == (-1, 1)
    assert parts[1] == (1, 1)


def test_rational_roots():
    p = P(-2, 1) * P(3, 2) * P(1, 0, 1)
    assert rational_roots(p) == [Fraction(-3, 2), Fraction(2)]


# ---------------------------------------------------------------------------
# roots of unity


def test_root_of_unity_examples():
    assert root_of_unity_order(P(1, 1, 1)) == 3
    assert root_of_unity_order(P(1, 1)) == 2
    assert root_of_unity_order(P(-1, -1, 1)) is None  # x^2 - x - 1


def test_root_of_unity_rejects_reducible():
    with pytest.raises(InputError):
        root_of_unity_order(P(-1, 0, 1))


def test_root_of_unity_division_property():
    t = UniPoly.x()
    for q, k in [(P(1, 1, 1), 3), (P(1, 1), 2), (P(1, 0, 1), 4), (P(1, -1, 1), 6)]:
        assert root_of_unity_order(q) == k
        assert poly_powmod(t, k, q) == UniPoly.one()
        num = UniPoly([-1] + [0] * (k - 1) + [1])
        assert (num % q).is_zero


def test_root_of_unity_matches_cyclotomic_enumeration():
    # Search bound cross-check against direct cyclotomic enumeration, deg <= 8.
    from arithdyn.exact import euler_phi

    for k in range(1, 41):
        q = cyclotomic_poly(k)
        if q.degree() <= 8:
            assert root_of_unity_order(q) == k
            assert euler_phi(k) == q.degree()


def test_unity_root_records():
    p = P(1, 1) * P(1, 0, 1) * P(-2, 1)  # orders 2 and 4, plus non-unity root 2
    records, residual = unity_root_records(p)
    assert [r for r, _ in records] == [2, 4]
    assert residual.degree() == 1


def test_power_root_min_poly():
    q = P(1, 0, 1)  # roots +-i
    r = power_root_min_poly(q, 2)  # roots (+-i)^2 = -1
    assert r == P(1, 1)
    r = power_root_min_poly(q, 4)
    assert r == P(-1, 1)
    q = P(-2, 0, 1)  # roots +-sqrt(2)
    assert power_root_min_poly(q, 2) == P(-2, 1)
    assert power_root_min_poly(q, 3) == P(-8, 0, 1)


# ---------------------------------------------------------------------------
# invariant kernels


def test_invariant_kernel_examples():
    M = QMatrix([[1, 1], [0, 1]])
    basis = invariant_kernel(M, P(-1, 1))
    assert len(basis) == 1
    v = basis[0]
    assert v[1] == 0 and v[0] != 0

    M = QMatrix([[0, -1], [1, 0]])
    basis = invariant_kernel(M, P(1, 0, 1))
    assert len(basis) == 2  # whole space; per-root eigenspace dimension 1

    M = QMatrix([[1, 0], [0, 2]])
    basis = invariant_kernel(M, P(-2, 1))
    assert len(basis) == 1 and basis[0][0] == 0


def test_invariant_kernel_rejects_nondivisor():
    M = QMatrix([[1, 0], [0, 2]])
    with pytest.raises(InputError):
        invariant_kernel(M, P(-3, 1))


def test_invariant_kernel_annihilates():
    from arithdyn.exact import mat_vec, poly_of_matrix

    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 3)
        M = QMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        cp = M.charpoly()
        for q, _m in factor_rational(cp):
            basis = invariant_kernel(M, q)
            qm = poly_of_matrix(q, M.entries)
            for v in basis:
                assert all(x == 0 for x in mat_vec(qm, v))
            assert len(basis) % q.degree() == 0


# ---------------------------------------------------------------------------
# quadratic field elements


def test_quadelem_arithmetic():
    x = QuadElem(1, 2, 2)  # 1 + 2 sqrt 2
    y = QuadElem(Fraction(1, 2), -1, 2)
    assert x + y == QuadElem(Fraction(3, 2), 1, 2)
    assert x * x == QuadElem(9, 4, 2)
    assert (x / x) == 1
    assert x.conjugate() == QuadElem(1, -2, 2)
    assert x.norm() == 1 - 8
    inv = x.inverse()
    assert x * inv == 1


def test_quadelem_mixed_context_rejected():
    x = QuadElem(1, 1, 2)
    y = QuadElem(1, 1, 3)
    with pytest.raises(InputError):
        _ = x + y


def test_quadelem_rejects_bad_d():
    with pytest.raises(InputError):
        QuadElem(1, 1, 4)
    with pytest.raises(InputError):
        QuadElem(1, 1, 0)


def test_charpoly_and_kernel_over_quad():
    from arithdyn.exact import kernel_basis, mat_sub, identity_matrix

    r2 = QuadElem(0, 1, 2)
    M = ((QuadElem(1, 0, 2), r2, QuadElem(0, 0, 2)),
         (QuadElem(0, 0, 2), QuadElem(1, 0, 2), QuadElem(0, 0, 2)),
         (QuadElem(0, 0, 2), QuadElem(0, 0, 2), QuadElem(1, 0, 2)))
    from arithdyn.exact.matrix import charpoly

    cp = charpoly(M)
    assert cp == UniPoly([-1, 3, -3, 1])  # (t-1)^3
    ker = kernel_basis(mat_sub(M, identity_matrix(3)))
    assert len(ker) == 2  # the fixed line y = 0 in P^2
