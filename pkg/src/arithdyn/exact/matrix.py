"""Exact linear algebra over Q and Q(sqrt d).

All routines work on tuples of tuples (rows) whose entries support field
arithmetic through Python operators (Fraction or QuadElem).  Used generically;
QMatrix is a thin immutable wrapper for the public surface.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from ..errors import InputError
from .numbers import QuadElem, as_rat
from .poly import UniPoly


def _rows(M):
    return [list(r) for r in M]


def mat_shape(M):
    return len(M), len(M[0]) if M else 0


def identity_matrix(n: int):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))

def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c):
    return tuple(tuple(x * c for x in r) for r in A)


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0])
    Bc = list(zip(*B))
    return tuple(
        tuple(sum(A[i][t] * Bc[j][t] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_vec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_pow(A, e: int):
    n = len(A)
    out = identity_matrix(n)
    base = A
    while e:
        if e & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        e >>= 1
    return out


def transpose(A):
    return tuple(zip(*A))


def rref(M):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = _rows(M)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def kernel_basis(M):
    """Basis of the right kernel {v : Mv = 0} as a list of tuples."""
    if not M:
        return []
    ncols = len(M[0])
    rows, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(M, b):
    """One solution of Mx = b, or None if inconsistent."""
    if not M:
        return None
    ncols = len(M[0])
    aug = [list(row) + [bv] for row, bv in zip(M, b)]
    rows, pivots = rref(aug)
    for row in rows:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return tuple(x)


def det(M):
    """Determinant by fraction-free-ish Gaussian elimination with pivoting."""
    rows = _rows(M)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    sign = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        pv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    prod = rows[0][0]
    for i in range(1, n):
        prod = prod * rows[i][i]
    return prod * sign


def inverse(M):
    n = len(M)
    aug = [list(row) + list(identity_matrix(n)[i]) for i, row in enumerate(M)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise InputError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def charpoly(M) -> UniPoly:
    """Characteristic polynomial det(tI - M) by Faddeev-LeVerrier.

    Valid in characteristic 0 (divides by 1..n).  Rational entries give a
    rational UniPoly; QuadElem entries raise unless every coefficient is
    rational.
    """
    n = len(M)
    coeffs = [Fraction(1)]  # c_n = 1, then c_{n-1}, ...
    Mk = identity_matrix(n)
    for k in range(1, n + 1):
        Mk = mat_mul(M, Mk)
        tr = Mk[0][0]
        for i in range(1, n):
            tr = tr + Mk[i][i]
        ck = tr * Fraction(-1, k)
        coeffs.append(ck)
        if k < n:
            Mk = tuple(
                tuple(Mk[i][j] + (ck if i == j else 0) for j in range(n))
                for i in range(n)
            )
    out = []
    for c in reversed(coeffs):  # ascending: c_0 ... c_n
        if isinstance(c, QuadElem):
            if not c.is_rational:
                raise InputError(
                    "characteristic polynomial has irrational coefficients; "
                    "only rational characteristic polynomials are supported"
                )
            c = c.rational_value()
        out.append(c)
    return UniPoly(out)


def poly_of_matrix(q: UniPoly, M):
    """q(M) for a rational polynomial q."""
    n = len(M)
    out = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    power = identity_matrix(n)
    for i, c in enumerate(q.coeffs):
        if c:
            out = mat_add(out, mat_scale(power, c))
        if i < len(q.coeffs) - 1:
            power = mat_mul(power, M)
    return out


def exterior_power_matrix(M, e: int):
    """Matrix of the induced action on the e-th exterior power.

    Rows/columns indexed by sorted e-subsets of {0..n-1} in lexicographic
    order; entry (S, T) is the minor det(M[S, T]).
    """
    n = len(M)
    subsets = list(combinations(range(n), e))
    out = []
    for S in subsets:
        row = []
        for T in subsets:
            sub = [[M[i][j] for j in T] for i in S]
            row.append(det(sub))
        out.append(tuple(row))
    return tuple(out), subsets


def wedge_coordinates(vectors, subsets=None):
    """Pluecker coordinates of span(vectors) as a single exterior vector."""
    e = len(vectors)
    n = len(vectors[0])
    if subsets is None:
        subsets = list(combinations(range(n), e))
    out = []
    for S in subsets:
        sub = [[v[j] for j in S] for v in vectors]
        out.append(det(sub))
    return tuple(out)


# ---------------------------------------------------------------------------
# vector normalization


def normalize_rat_vector(v) -> tuple[int, ...]:
    """Scale a nonzero rational vector to primitive integers, first nonzero > 0."""
    vals = [as_rat(x) for x in v]
    if all(x == 0 for x in vals):
        raise InputError("cannot normalize the zero vector")
    den = 1
    for x in vals:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def normalize_quad_vector(v):
    """Scale a nonzero Q(sqrt d) vector so its first nonzero entry is 1."""
    vals = list(v)
    lead = None
    for x in vals:
        if x != 0:
            lead = x
            break
    if lead is None:
        raise InputError("cannot normalize the zero vector")
    if isinstance(lead, QuadElem):
        inv = lead.inverse()
    else:
        inv = Fraction(1) / as_rat(lead)
    return tuple(x * inv for x in vals)


def vector_in_span(v, basis) -> bool:
    """Exact membership of v in the span of basis vectors."""
    if not basis:
        return all(x == 0 for x in v)
    M = transpose(list(basis))
    return solve(M, list(v)) is not None


def subspace_contained(basis_a, basis_b) -> bool:
    return all(vector_in_span(v, basis_b) for v in basis_a)


def subspace_equal(basis_a, basis_b) -> bool:
    return subspace_contained(basis_a, basis_b) and subspace_contained(
        basis_b, basis_a
    )


def intersect_subspaces(basis_a, basis_b):
    """Basis of the intersection of two spans inside the same ambient space."""
    if not basis_a or not basis_b:
        return []
    # Solve a*A + b*B = 0; intersection vectors are a*A parts of kernel.
    rows = []
    dim = len(basis_a[0])
    for i in range(dim):
        rows.append(
            tuple([v[i] for v in basis_a] + [-w[i] for w in basis_b])
        )
    out = []
    for k in kernel_basis(rows):
        acoef = k[: len(basis_a)]
        vec = [Fraction(0)] * dim
        for c, bv in zip(acoef, basis_a):
            for i in range(dim):
                vec[i] += c * bv[i]
        if any(x != 0 for x in vec):
            out.append(tuple(vec))
    # Reduce to an independent set.
    red, piv = rref(out) if out else ([], [])
    return [tuple(r) for r in red[: len(piv)]]


class QMatrix:
    """Immutable square matrix over Q or Q(sqrt d)."""

    __slots__ = ("entries", "n")

    def __init__(self, entries):
        rows = tuple(tuple(_norm_entry(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputError("QMatrix must be square")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *_):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(identity_matrix(n))

    def __eq__(self, other):
        if isinstance(other, QMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            return QMatrix(mat_mul(self.entries, other.entries))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return QMatrix(inverse(self.entries)) ** (-e)
        return QMatrix(mat_pow(self.entries, e))

    def det(self):
        return det(self.entries)

    def inverse(self) -> "QMatrix":
        return QMatrix(inverse(self.entries))

    def charpoly(self) -> UniPoly:
        return charpoly(self.entries)

    def apply(self, v):
        return mat_vec(self.entries, v)

    def is_rational(self) -> bool:
        return all(
            not isinstance(x, QuadElem) or x.is_rational
            for row in self.entries
            for x in row
        )

    def quad_context(self):
        """The d of any irrational entry, or None if all entries rational."""
        for row in self.entries:
            for x in row:
                if isinstance(x, QuadElem) and not x.is_rational:
                    return x.d
        return None

    def __repr__(self):
        return "QMatrix(" + repr([list(r) for r in self.entries]) + ")"


def _norm_entry(x):
    if isinstance(x, QuadElem):
        return x.a if x.b == 0 else x
    return as_rat(x)
