"""Factorization over Q and root-of-unity analysis.

The factorization method is Kronecker interpolation over Z: slow but exact
and dependency-free, fine for the desk-scale degrees this library meets
(typically <= 16 with moderate coefficients).
"""

from fractions import Fraction
from itertools import product

from ..errors import InputError
from .intfactor import divisors, euler_phi
from .poly import UniPoly, lagrange_interpolate, poly_gcd, poly_powmod, squarefree_part

# ---------------------------------------------------------------------------
# squarefree decomposition (Yun)


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """[(g_i, i)] with p = c * prod g_i^i, the g_i squarefree and coprime."""
    if p.is_zero:
        raise InputError("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree() == 0:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return [(p, 1)]
    w = p.exact_div(g)
    out = []
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, g)
        z = w.exact_div(y)
        if z.degree() > 0:
            out.append((z, i))
        w = y
        g = g.exact_div(y)
        i += 1
    return out


# ---------------------------------------------------------------------------
# rational roots


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots of p, each listed once, sorted."""
    if p.is_zero:
        raise InputError("the zero polynomial has every root")
    ints = list(p.int_coeffs())
    k = 0
    while ints[k] == 0:
        k += 1
    roots = set()
    if k > 0:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) > 1:
        lead, const = ints[-1], ints[0]
        for b in divisors(lead):
            for a in divisors(const):
                for cand in (Fraction(a, b), Fraction(-a, b)):
                    if p.evaluate(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _linear_factor_from_root(r: Fraction) -> UniPoly:
    # Primitive integer factor b*x - a for the root a/b.
    return UniPoly([-r.numerator, r.denominator])


# ---------------------------------------------------------------------------
# Kronecker factorization


_SAMPLE_XS = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8]


def _kronecker_split(p: UniPoly):
    """One nontrivial factor of a primitive squarefree p with no rational
    roots, or None if p is irreducible.  Deterministic."""
    n = p.degree()
    for m in range(2, n // 2 + 1):
        xs = _SAMPLE_XS[: m + 1]
        if len(xs) < m + 1:
            xs = list(range(-(m + 1), m + 2))[: m + 1]
        values = [int(p.evaluate(Fraction(x))) for x in xs]
        div_lists = []
        for j, v in enumerate(values):
            ds = divisors(v)
            if j == 0:
                # Fix the sign of the first value: factors come in +/- pairs.
                div_lists.append(ds)
            else:
                div_lists.append([d for dd in ds for d in (dd, -dd)])
        for combo in product(*div_lists):
            cand = lagrange_interpolate(list(zip(xs, combo)))
            if cand.degree() < 1:
                continue
            if any(c.denominator != 1 for c in cand.coeffs):
                continue
            q, r = p.divmod(cand)
            if r.is_zero and q.degree() >= 1:
                return UniPoly(cand.int_coeffs())
    return None


def _factor_squarefree(p: UniPoly) -> list[UniPoly]:
    """Irreducible factors of a squarefree p (primitive int, positive lead)."""
    p = UniPoly(p.int_coeffs())
    out = []
    for r in rational_roots(p):
        f = _linear_factor_from_root(r)
        out.append(UniPoly(f.int_coeffs()))
        p = p.exact_div(f)
    p = UniPoly(p.int_coeffs())
    stack = [p] if p.degree() >= 1 else []
    while stack:
        q = stack.pop()
        split = _kronecker_split(q)
        if split is None:
            out.append(UniPoly(q.int_coeffs()))
        else:
            stack.append(split)
            stack.append(q.exact_div(split))
    return out


def factor_rational(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible factorization over Q.

    Returns [(factor, multiplicity)] with each factor primitive-integer with
    positive leading coefficient; the product over factors equals p up to a
    rational constant.  Ordering: by degree, then by integer coefficient
    tuple.
    """
    if p.is_zero:
        raise InputError("cannot factor the zero polynomial")
    if p.degree() == 0:
        return []
    coeffs = list(p.coeffs)
    k = 0
    while coeffs[k] == 0:
        k += 1
    out = []
    if k:
        out.append((UniPoly.x(), k))
    body = UniPoly(coeffs[k:])
    if body.degree() >= 1:
        for part, mult in squarefree_decomposition(body):
            for f in _factor_squarefree(part):
                out.append((f, mult))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].int_coeffs()))
    return out


def is_irreducible(p: UniPoly) -> bool:
    if p.degree() < 1:
        return False
    fac = factor_rational(p)
    return len(fac) == 1 and fac[0][1] == 1


# ---------------------------------------------------------------------------
# cyclotomic polynomials and root-of-unity detection

_cyclo_cache: dict[int, UniPoly] = {}


def cyclotomic_poly(k: int) -> UniPoly:
    if k in _cyclo_cache:
        return _cyclo_cache[k]
    num = UniPoly([-1] + [0] * (k - 1) + [1])  # t^k - 1
    for d in range(1, k):
        if k % d == 0:
            num = num.exact_div(cyclotomic_poly(d))
    _cyclo_cache[k] = num
    return num


def root_of_unity_order(q: UniPoly):
    """Order k if the roots of the irreducible q are primitive k-th roots of
    unity, else None.  Search bound 2*deg(q)^2 from phi(k) >= sqrt(k/2)."""
    if q.degree() < 1:
        raise InputError("need a nonconstant polynomial")
    if not is_irreducible(q):
        raise InputError("root_of_unity_order needs an irreducible input")
    qi = UniPoly(q.int_coeffs())
    if qi.lc() != 1 or abs(qi[0]) != 1:
        return None  # roots of unity are algebraic units with monic min poly
    dq = qi.degree()
    bound = 2 * dq * dq
    t = UniPoly.x()
    for k in range(1, bound + 1):
        if euler_phi(k) != dq:
            continue
        if poly_powmod(t, k, qi) == UniPoly.one():
            return k
    # k = 1, 2 have phi(k) = 1; catch t-1 and t+1 explicitly above via the
    # loop; anything that survives is not a root of unity.
    return None


def unity_root_records(p: UniPoly):
    """Split off the root-of-unity part of p.

    Returns (records, residual): records is a list of (order r, monic factor
    whose roots are exactly the order-r roots of unity occurring in p),
    processed in ascending r; residual is the monic squarefree part carrying
    no roots of unity.  Multiplicities are ignored.
    """
    if p.degree() < 1:
        raise InputError("need a nonconstant polynomial")
    residual = squarefree_part(p)
    bound = 2 * residual.degree() ** 2
    t = UniPoly.x()
    records = []
    for r in range(1, bound + 1):
        if residual.degree() == 0:
            break
        if euler_phi(r) > residual.degree():
            continue
        g = poly_gcd(residual, poly_powmod(t, r, residual) - UniPoly.one())
        if g.degree() >= 1:
            records.append((r, g))
            residual = residual.exact_div(g)
    return records, residual


def has_unity_root(p: UniPoly) -> bool:
    records, _ = unity_root_records(p)
    return bool(records)


def all_roots_unity(p: UniPoly):
    """(True, lcm-of-orders) if every root of p is a root of unity, else
    (False, None)."""
    from math import lcm

    records, residual = unity_root_records(p)
    if residual.degree() > 0:
        return False, None
    k = 1
    for r, _ in records:
        k = lcm(k, r)
    return True, k


# ---------------------------------------------------------------------------
# minimal polynomials of powers of roots


def power_root_min_poly(q: UniPoly, k: int) -> UniPoly:
    """Minimal polynomial of lambda^k for lambda a root of irreducible q.

    Built without factoring: the characteristic polynomial of multiplication
    by t^k on Q[t]/(q) is prod (x - lambda_i^k); the roots lambda_i^k form a
    single Galois orbit, so its squarefree part is irreducible.
    """
    from .matrix import charpoly

    d = q.degree()
    qm = q.monic()
    w = poly_powmod(UniPoly.x(), k, qm)
    cols = []
    cur = w
    basis_mats = []
    for j in range(d):
        basis_mats.append([cur[i] for i in range(d)])
        cur = (cur * UniPoly.x()) % qm
    M = tuple(tuple(basis_mats[j][i] for j in range(d)) for i in range(d))
    cp = charpoly(M)
    sf = squarefree_part(cp)
    return UniPoly(sf.int_coeffs())
