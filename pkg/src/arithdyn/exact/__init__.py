"""Exact arithmetic kernel: rationals, Q(sqrt d), polynomials, binary forms,
resultants, factorization over Q, root-of-unity tests, and exact linear
algebra."""

from .intfactor import divisors, euler_phi, factorint, is_prime, primes_upto
from .matrix import (
    QMatrix,
    charpoly,
    det,
    exterior_power_matrix,
    identity_matrix,
    intersect_subspaces,
    inverse,
    kernel_basis,
    mat_add,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    normalize_quad_vector,
    normalize_rat_vector,
    poly_of_matrix,
    rank,
    solve,
    subspace_contained,
    subspace_equal,
    vector_in_span,
    wedge_coordinates,
)
from .numbers import QuadElem, Rat, as_rat, quad_or_rat, rational_sqrt
from .poly import (
    BinForm,
    UniPoly,
    form_gcd,
    lagrange_interpolate,
    poly_gcd,
    poly_powmod,
    resultant,
    squarefree_part,
    sylvester_matrix,
)
from .polyfactor import (
    all_roots_unity,
    cyclotomic_poly,
    factor_rational,
    has_unity_root,
    is_irreducible,
    power_root_min_poly,
    rational_roots,
    root_of_unity_order,
    squarefree_decomposition,
    unity_root_records,
)


def invariant_kernel(M: QMatrix, q: UniPoly):
    """Basis of ker q(M) for q an irreducible factor of charpoly(M).

    The kernel dimension is a multiple of deg q; each individual root of q
    contributes an eigenspace of dimension dim/deg q.
    """
    from ..errors import InputError

    cp = M.charpoly()
    if q.degree() < 1 or not (cp % q).is_zero:
        raise InputError("q must be a nonconstant divisor of the characteristic polynomial")
    if not is_irreducible(q):
        raise InputError("q must be irreducible over Q")
    qm = poly_of_matrix(q.monic(), M.entries)
    return kernel_basis(qm)
