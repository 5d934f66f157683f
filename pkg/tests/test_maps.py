"""Map layer: composition, iteration, good reduction, embeddings, parsing."""

import random
from fractions import Fraction

import pytest

from arithdyn.errors import InputError, ResourceLimitError
from arithdyn.exact import QMatrix, QuadElem
from arithdyn.maps import (
    AffineAuto,
    P1Map,
    ProjLinAuto,
    ProjPoint,
    parse_map_spec,
    parse_point,
)


def poly_map(*coeffs):
    return P1Map.from_polynomial(list(coeffs))


TWO_X = poly_map(0, 2)          # 2x
SQUARE = poly_map(0, 0, 1)      # x^2
SQUARE_M1 = poly_map(-1, 0, 1)  # x^2 - 1
TWO_SQUARE = poly_map(0, 0, 2)  # 2x^2


def test_compose_examples():
    fg = TWO_X.compose(SQUARE)
    assert fg == poly_map(0, 0, 2)
    assert SQUARE.compose(SQUARE) == poly_map(0, 0, 0, 0, 1)
    h = SQUARE_M1
    assert P1Map.identity().compose(h) == h
    assert h.compose(P1Map.identity()) == h


def test_compose_degree_multiplies():
    rng = random.Random(5)
    for _ in range(20):
        f = _random_map(rng)
        g = _random_map(rng)
        assert f.compose(g).degree == f.degree * g.degree


def _random_map(rng, dmax=3):
    while True:
        d = rng.randint(1, dmax)
        num = [rng.randint(-3, 3) for _ in range(d + 1)]
        den = [rng.randint(-3, 3) for _ in range(d + 1)]
        try:
            return P1Map(num, den)
        except InputError:
            continue


def test_compose_associative_random():
    rng = random.Random(1)
    for _ in range(200):
        f = _random_map(rng, 2)
        g = _random_map(rng, 2)
        h = _random_map(rng, 2)
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_iterate_examples():
    assert SQUARE.iterate(2) == poly_map(0, 0, 0, 0, 1)
    assert TWO_X.iterate(3) == poly_map(0, 8)
    f2 = SQUARE_M1.iterate(2)
    # (x^2-1)^2 - 1 expanded: x^4 - 2x^2
    assert f2 == poly_map(0, 0, -2, 0, 1)


def test_iterate_matches_composition():
    rng = random.Random(9)
    for _ in range(20):
        f = _random_map(rng, 2)
        m = rng.randint(1, 2)
        n = rng.randint(1, 2)
        assert f.iterate(m + n, cap=10**6) == f.iterate(m, cap=10**6).compose(
            f.iterate(n, cap=10**6), cap=10**6
        )


def test_iterate_cap():
    with pytest.raises(ResourceLimitError):
        SQUARE.iterate(13)  # 2^13 > 4096


def test_apply():
    assert SQUARE.apply(ProjPoint.affine(3)) == ProjPoint.affine(9)
    assert SQUARE_M1.apply(ProjPoint.affine(0)) == ProjPoint.affine(-1)
    assert SQUARE.apply(ProjPoint.infinity()) == ProjPoint.infinity()
    half = SQUARE.apply(ProjPoint.affine(Fraction(1, 2)))
    assert half == ProjPoint.affine(Fraction(1, 4))


def test_good_reduction_primes():
    f = P1Map([1, 0, -1], [0, 0, 1])  # (X^2 - Y^2 : Y^2), resultant 1
    assert f.good_reduction_primes(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    g = P1Map([1, 0, 0], [0, 0, 5])  # (X^2 : 5 Y^2)
    assert 5 not in g.good_reduction_primes(20)
    assert TWO_X.good_reduction_primes(10) == [3, 5, 7]


def test_resultant_multiplicativity_sanity():
    for f in (SQUARE, SQUARE_M1, TWO_X):
        ff = f.compose(f)
        assert set(f.good_reduction_primes(30)) <= set(ff.good_reduction_primes(30)) or \
            set(ff.good_reduction_primes(30)) <= set(f.good_reduction_primes(30))
        # good reduction of f implies good reduction of f о f
        assert set(f.good_reduction_primes(30)) <= set(ff.good_reduction_primes(30))


def test_joint_normalization_and_equality():
    a = P1Map([2, 0, 0], [0, 0, 2])
    b = P1Map([1, 0, 0], [0, 0, 1])
    assert a == b
    c = P1Map([Fraction(1, 2), 0, 0], [0, 0, Fraction(1, 2)])
    assert c == b
    d = P1Map([-1, 0, 0], [0, 0, -1])
    assert d == b


def test_embed_affine_examples():
    neg = AffineAuto(QMatrix([[-1]]), [0])
    assert neg.embed() == ProjLinAuto(QMatrix([[-1, 0], [0, 1]]))
    shift = AffineAuto(QMatrix([[1]]), [1])
    assert shift.embed() == ProjLinAuto(QMatrix([[1, 1], [0, 1]]))
    r2 = QuadElem(0, 1, 2)
    f10 = AffineAuto(QMatrix([[1, 1 + r2 * 0]]woops), [0])
    assert False


def test_embed_is_homomorphism():
    rng = random.Random(4)
    for _ in range(50):
        A1, b1 = _random_affine(rng)
        A2, b2 = _random_affine(rng)
        a1 = AffineAuto(A1, b1)
        a2 = AffineAuto(A2, b2)
        assert a1.compose(a2).embed() == a1.embed().compose(a2.embed())


def _random_affine(rng, n=2):
    while True:
        A = QMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if A.det() != 0:
            return A, [rng.randint(-3, 3) for _ in range(n)]


def test_projlin_normalization():
    a = ProjLinAuto(QMatrix([[2, 0], [0, 4]]))
    b = ProjLinAuto(QMatrix([[1, 0], [0, 2]]))
    assert a == b
    c = ProjLinAuto(QMatrix([[-1, 0], [0, -2]]))
    assert c == b
    assert ProjLinAuto(QMatrix([[5, 0], [0, 5]])).is_identity()


def test_projlin_apply_and_inverse():
    g = ProjLinAuto(QMatrix([[1, 1], [0, 1]]))
    x = ProjPoint.affine(3)
    assert g.apply(x) == ProjPoint.affine(4)
    assert g.inverse().apply(g.apply(x)) == x
    assert (g**3).apply(x) == ProjPoint.affine(6)


def test_parse_map_spec():
    f = parse_map_spec("p1:[0,0,1]/[1,0,0]")
    assert f == SQUARE
    g = parse_map_spec("mat:[[1,1],[0,1]]")
    assert g == ProjLinAuto(QMatrix([[1, 1], [0, 1]]))
    with pytest.raises(InputError):
        parse_map_spec("p1:[1,0,-1]/[1,0,-1]")
    aff = parse_map_spec("aff(d=2):A=[[1,(1,1)],[0,1]],b=[1,0]")
    assert isinstance(aff, AffineAuto)
    assert aff.A.entries[0][1] == QuadElem(1, 1, 2)
    with pytest.raises(InputError):
        parse_map_spec("p1:[1,2]/[3]")
    with pytest.raises(InputError):
        parse_map_spec("nonsense:[1]")


def test_parse_point():
    assert parse_point("inf") == ProjPoint.infinity()
    assert parse_point("-1/2") == ProjPoint.affine(Fraction(-1, 2))
    assert parse_point("3:4") == ProjPoint([3, 4])
    assert parse_point("1:2:3") == ProjPoint([1, 2, 3])
    with pytest.raises(InputError):
        parse_point("abc")


def test_point_normalization_and_order():
    assert ProjPoint([2, 4]) == ProjPoint([1, 2])
    assert ProjPoint([-1, 1]) == ProjPoint([1, -1])
    assert ProjPoint([Fraction(1, 3), 1]) == ProjPoint([1, 3])
    pts = [
        ProjPoint.affine(1),
        ProjPoint.affine(0),
        ProjPoint.affine(-1),
        ProjPoint.infinity(),
        ProjPoint.affine(2),
    ]
    pts.sort(key=lambda p: p.sort_key())
    assert [repr(p) for p in pts] == ["0", "inf", "1", "-1", "2"]


def test_point_repr():
    assert repr(ProjPoint.affine(Fraction(-1, 2))) == "-1/2"
    assert repr(ProjPoint.infinity()) == "inf"
    assert repr(ProjPoint([1, 2, 3])) == "1:2:3"
