"""Univariate polynomials over Q and homogeneous binary forms.

UniPoly stores Fraction coefficients in ascending degree order.  BinForm
stores coefficients of X^(d-i) Y^i at index i.  All operations are exact.
"""

from fractions import Fraction
from math import gcd

from ..errors import InputError
from .numbers import as_rat

# ---------------------------------------------------------------------------
# univariate polynomials


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Polynomial in one variable with Fraction coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _trim([as_rat(c) for c in coeffs]))

    def __setattr__(self, *_):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if self.is_zero:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        """Exact polynomial division with remainder over Q."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        d, lc = other.degree(), other.lc()
        if self.degree() < d:
            return UniPoly.zero(), self
        rem = list(self.coeffs)
        q = [Fraction(0)] * (self.degree() - d + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + d] / lc
            if c:
                q[k] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= c * oc
        return UniPoly(q), UniPoly(rem[:d])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise InputError("exact_div with nonzero remainder")
        return q

    def evaluate(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def compose(self, other):
        out = UniPoly.zero()
        for c in reversed(self.coeffs):
            out = out * other + UniPoly([c])
        return out

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero:
            return self
        lc = self.lc()
        return UniPoly([c / lc for c in self.coeffs])

    def scale_arg(self, t):
        """p(t*x) for a rational scalar t."""
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * as_rat(t)
        return UniPoly(out)

    def int_coeffs(self) -> tuple[int, ...]:
        """Primitive integer coefficients with positive leading coefficient."""
        if self.is_zero:
            return ()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def primitive(self) -> "UniPoly":
        return UniPoly(self.int_coeffs())

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (works over Q(sqrt d) coefficients too)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def poly_powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    """base^e mod `mod`, by square and multiply."""
    out = UniPoly.one() % mod
    base = base % mod
    while e:
        if e & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        e >>= 1
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    """p divided by gcd(p, p'), monic."""
    if p.is_zero:
        raise InputError("squarefree part of 0")
    g = poly_gcd(p, p.derivative())
    if g.is_zero or g.degree() == 0:
        return p.monic()
    return p.exact_div(g).monic()


def lagrange_interpolate(points) -> UniPoly:
    """Unique polynomial of degree < len(points) through (x_i, y_i)."""
    xs = [as_rat(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InputError("interpolation nodes must be distinct")
    out = UniPoly.zero()
    for i, (xi, yi) in enumerate(points):
        num = UniPoly([yi])
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            num = num * UniPoly([-as_rat(xj), 1])
            den *= as_rat(xi) - as_rat(xj)
        out = out + num * (Fraction(1) / den)
    return out


# ---------------------------------------------------------------------------
# binary forms


class BinForm:
    """Homogeneous form of degree d in X, Y; index i holds the X^(d-i) Y^i coefficient."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs, degree=None):
        coeffs = [as_rat(c) for c in coeffs]
        if degree is None:
            if not coeffs:
                raise InputError("empty coefficient list needs an explicit degree")
            degree = len(coeffs) - 1
        if len(coeffs) != degree + 1:
            raise InputError(
                f"degree {degree} form needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("BinForm is immutable")

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BinForm):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def evaluate(self, x, y):
        # Horner in x/y-free form: sum c_i x^(d-i) y^i.
        d = self.degree
        out = 0
        for i, c in enumerate(self.coeffs):
            if c:
                out += c * x ** (d - i) * y**i
        return out

    def __add__(self, other):
        if self.degree != other.degree:
            raise InputError("cannot add forms of different degrees")
        return BinForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __sub__(self, other):
        if self.degree != other.degree:
            raise InputError("cannot subtract forms of different degrees")
        return BinForm([a - b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BinForm([c * other for c in self.coeffs], self.degree)
        d = self.degree + other.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return BinForm(out, d)

    __rmul__ = __mul__

    def dehomogenize(self) -> UniPoly:
        """F(x, 1) as a univariate polynomial in x."""
        return UniPoly(list(reversed(self.coeffs)))

    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root (1:0), i.e. the power of Y dividing F."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise InputError("zero form has no well-defined roots")

    def normalized(self) -> "BinForm":
        """Primitive integer coefficients, first nonzero coefficient positive."""
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
        return BinForm(ints, self.degree)

    def __repr__(self):
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if d - i:
                mono.append("X" if d - i == 1 else f"X^{d - i}")
            if i:
                mono.append("Y" if i == 1 else f"Y^{i}")
            m = "*".join(mono) or "1"
            parts.append(m if c == 1 and mono else f"{c}*{m}" if mono else str(c))
        return " + ".join(parts) if parts else "0"


def sylvester_matrix(F: BinForm, G: BinForm):
    """Sylvester matrix of two degree-d binary forms (2d x 2d over Q)."""
    if F.degree != G.degree:
        raise InputError("resultant needs forms of equal degree")
    d = F.degree
    n = 2 * d
    rows = []
    for k in range(d):
        row = [Fraction(0)] * n
        for i, c in enumerate(F.coeffs):
            row[k + i] = c
        rows.append(row)
    for k in range(d):
        row = [Fraction(0)] * n
        for i, c in enumerate(G.coeffs):
            row[k + i] = c
        rows.append(row)
    return rows


def resultant(F: BinForm, G: BinForm) -> Fraction:
    """Binary-form resultant via the Sylvester determinant.

    Zero exactly when F and G share a projective root over the algebraic
    closure (including (1:0) via vanishing leading coefficients).
    """
    if F.degree != G.degree or F.degree < 1:
        raise InputError("resultant needs two forms of equal degree >= 1")
    from .matrix import det

    return det(sylvester_matrix(F, G))


def form_gcd(F: BinForm, G: BinForm) -> BinForm:
    """Gcd of two binary forms as a binary form (primitive normalized)."""
    # Common Y-power plus gcd of dehomogenizations, rehomogenized.
    if F.is_zero:
        return G.normalized()
    if G.is_zero:
        return F.normalized()
    yf, yg = F.infinity_multiplicity(), G.infinity_multiplicity()
    ycommon = min(yf, yg)
    pf, pg = F.dehomogenize(), G.dehomogenize()
    g = poly_gcd(pf, pg)
    coeffs = [Fraction(0)] * ycommon + list(reversed(g.coeffs))
    return BinForm(coeffs, g.degree() + ycommon).normalized()
