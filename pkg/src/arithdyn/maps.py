"""Dynamical systems on P^1 and P^n: morphisms as binary-form pairs,
projective-linear automorphisms, affine automorphisms over Q(sqrt d), and
projective points, with composition, iteration, and good-reduction data.

Text formats (consumed by the CLI):
    p1:[a0,...,ad]/[b0,...,bd]   numerator/denominator coefficients in
                                 ascending powers of x (a_i multiplies x^i)
    mat:[[...],[...]]            square rational matrix, row by row
    aff(d=2):A=[[...]],b=[...]   affine map over Q(sqrt d); each entry is a
                                 rational `a` or a pair `(a,b)` meaning
                                 a + b*sqrt(d)
Points: `inf`, a rational `p/q`, or colon-separated projective `a:b:...`.
"""

from fractions import Fraction
from math import gcd

from .errors import InputError, ResourceLimitError
from .exact import (
    BinForm,
    QMatrix,
    QuadElem,
    as_rat,
    inverse,
    mat_mul,
    mat_vec,
    normalize_quad_vector,
    normalize_rat_vector,
    resultant,
)

DEGREE_CAP = 4096


# ---------------------------------------------------------------------------
# projective points over Q


class ProjPoint:
    """Point of P^n(Q), stored as primitive integers, first nonzero > 0."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", normalize_rat_vector(coords))

    def __setattr__(self, *_):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def affine(cls, x) -> "ProjPoint":
        return cls([as_rat(x), 1])

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls([1, 0])

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def is_infinity(self) -> bool:
        return len(self.coords) == 2 and self.coords[1] == 0

    def affine_value(self) -> Fraction:
        if len(self.coords) != 2 or self.coords[1] == 0:
            raise InputError(f"{self} has no affine value")
        return Fraction(self.coords[0], self.coords[1])

    def sort_key(self):
        c = self.coords
        return (
            max(abs(x) for x in c),
            tuple(abs(x) for x in c),
            tuple(1 if x < 0 else 0 for x in c),
            c,
        )

    def __eq__(self, other):
        if isinstance(other, ProjPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if len(self.coords) == 2:
            a, b = self.coords
            if b == 0:
                return "inf"
            v = Fraction(a, b)
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return ":".join(str(x) for x in self.coords)


def parse_point(text: str) -> ProjPoint:
    text = text.strip()
    if not text:
        raise InputError("empty point")
    if text == "inf":
        return ProjPoint.infinity()
    if ":" in text:
        parts = text.split(":")
        try:
            return ProjPoint([Fraction(p.strip()) for p in parts])
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad projective point {text!r}: {e}") from None
    try:
        return ProjPoint.affine(Fraction(text))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad point {text!r}: {e}") from None


# ---------------------------------------------------------------------------
# integer form helpers (ascending-in-Y convention, index i <-> X^(d-i) Y^i)


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _substitute(coeffs, A, B):
    """Evaluate the form with given coefficients at the form pair (A, B)."""
    d = len(coeffs) - 1
    need_a = sorted({d - i for i, c in enumerate(coeffs) if c})
    need_b = sorted({i for i, c in enumerate(coeffs) if c})
    apow = {0: [1]}
    for k in range(1, (need_a[-1] if need_a else 0) + 1):
        apow[k] = _conv(apow[k - 1], A)
    bpow = {0: [1]}
    for k in range(1, (need_b[-1] if need_b else 0) + 1):
        bpow[k] = _conv(bpow[k - 1], B)
    deg_in = len(A) - 1
    out = [0] * (d * deg_in + 1)
    for i, c in enumerate(coeffs):
        if c:
            term = _conv(apow[d - i], bpow[i])
            for k, v in enumerate(term):
                out[k] += c * v
    return out


def _eval_form(coeffs, a, b):
    d = len(coeffs) - 1
    out = 0
    pa = [1] * (d + 1)
    pb = [1] * (d + 1)
    for k in range(1, d + 1):
        pa[k] = pa[k - 1] * a
        pb[k] = pb[k - 1] * b
    for i, c in enumerate(coeffs):
        if c:
            out += c * pa[d - i] * pb[i]
    return out


def _joint_normalize(fc, gc):
    """Joint content-1 integer coefficients, first nonzero overall positive."""
    fracs = [as_rat(c) for c in fc] + [as_rat(c) for c in gc]
    den = 1
    for c in fracs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise InputError("zero map")
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    k = len(fc)
    return tuple(ints[:k]), tuple(ints[k:])


# ---------------------------------------------------------------------------
# P^1 morphisms


class P1Map:
    """Morphism of P^1 given by a pair of degree-d binary forms (F : G).

    Stored jointly normalized (coprime integer coefficients, first nonzero
    positive); the resultant is nonzero, so the pair defines a morphism.
    """

    __slots__ = ("fcoeffs", "gcoeffs", "degree", "_res")

    def __init__(self, fcoeffs, gcoeffs, _trusted=False):
        if len(fcoeffs) != len(gcoeffs):
            raise InputError("numerator and denominator forms need equal degree")
        if len(fcoeffs) < 2:
            raise InputError("maps must have degree >= 1")
        fc, gc = _joint_normalize(fcoeffs, gcoeffs)
        object.__setattr__(self, "fcoeffs", fc)
        object.__setattr__(self, "gcoeffs", gc)
        object.__setattr__(self, "degree", len(fc) - 1)
        object.__setattr__(self, "_res", None)
        if not _trusted and self.resultant() == 0:
            raise InputError("zero resultant: the forms share a projective root")

    def __setattr__(self, *_):
        raise AttributeError("P1Map is immutable")

    # -- constructors

    @classmethod
    def identity(cls) -> "P1Map":
        return cls([1, 0], [0, 1], _trusted=True)

    @classmethod
    def from_ascending(cls, num, den) -> "P1Map":
        """Build from ascending-x coefficient lists (the text-format order)."""
        if len(num) != len(den):
            raise InputError("numerator and denominator need equal length")
        return cls(list(reversed(num)), list(reversed(den)))

    @classmethod
    def from_polynomial(cls, coeffs) -> "P1Map":
        """The polynomial map x -> sum c_i x^i as a morphism of P^1."""
        d = len(coeffs) - 1
        if d < 1:
            raise InputError("polynomial maps need degree >= 1")
        num = list(reversed(coeffs))
        den = [0] * d + [1]
        return cls(num, den)

    # -- views

    def numerator_form(self) -> BinForm:
        return BinForm(list(self.fcoeffs))

    def denominator_form(self) -> BinForm:
        return BinForm(list(self.gcoeffs))

    def ascending(self):
        return list(reversed(self.fcoeffs)), list(reversed(self.gcoeffs))

    def spec_string(self) -> str:
        num, den = self.ascending()
        fmt = lambda v: ",".join(str(x) for x in v)
        return f"p1:[{fmt(num)}]/[{fmt(den)}]"

    def is_identity(self) -> bool:
        return self.fcoeffs == (1, 0) and self.gcoeffs == (0, 1)

    def to_matrix(self) -> "ProjLinAuto":
        if self.degree != 1:
            raise InputError("only degree-1 maps correspond to matrices")
        a, b = self.fcoeffs
        c, d = self.gcoeffs
        return ProjLinAuto(QMatrix([[a, b], [c, d]]))

    # -- arithmetic

    def resultant(self) -> int:
        if self._res is None:
            r = resultant(self.numerator_form(), self.denominator_form())
            object.__setattr__(self, "_res", int(r))
        return self._res

    def apply(self, x: ProjPoint) -> ProjPoint:
        if x.n != 1:
            raise InputError("P1Map acts on points of P^1")
        a, b = x.coords
        return ProjPoint([_eval_form(self.fcoeffs, a, b), _eval_form(self.gcoeffs, a, b)])

    def compose(self, other: "P1Map", cap: int = DEGREE_CAP) -> "P1Map":
        """self after other (apply `other` first)."""
        d = self.degree * other.degree
        if d > cap:
            raise ResourceLimitError(
                f"degree {d} of the composition exceeds the cap {cap}"
            )
        A, B = list(other.fcoeffs), list(other.gcoeffs)
        fc = _substitute(self.fcoeffs, A, B)
        gc = _substitute(self.gcoeffs, A, B)
        return P1Map(fc, gc, _trusted=True)

    def iterate(self, n: int, cap: int = DEGREE_CAP) -> "P1Map":
        """n-th iterate by repeated squaring; degree d^n must fit the cap."""
        if n < 1:
            raise InputError("iterate needs n >= 1")
        if self.degree >= 2 and self.degree**n > cap:
            raise ResourceLimitError(
                f"degree {self.degree}^{n} exceeds the cap {cap}"
            )
        out = None
        base = self
        e = n
        while e:
            if e & 1:
                out = base if out is None else out.compose(base, cap)
            e >>= 1
            if e:
                base = base.compose(base, cap)
        return out

    def good_reduction_primes(self, bound: int) -> list[int]:
        """Primes p <= bound where the map stays a degree-d morphism mod p."""
        from .exact import primes_upto

        r = abs(self.resultant())
        return [p for p in primes_upto(bound) if r % p != 0]

    def __eq__(self, other):
        if isinstance(other, P1Map):
            return self.fcoeffs == other.fcoeffs and self.gcoeffs == other.gcoeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.fcoeffs, self.gcoeffs))

    def __repr__(self):
        return f"({self.numerator_form()} : {self.denominator_form()})"


# ---------------------------------------------------------------------------
# projective-linear automorphisms


def _normalize_matrix(M: QMatrix) -> QMatrix:
    entries = [x for row in M.entries for x in row]
    if M.quad_context() is None:
        flat = [x if isinstance(x, Fraction) else x.rational_value() for x in entries]
        den = 1
        for c in flat:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in flat]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g == 0:
            raise InputError("zero matrix")
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
        n = M.n
        return QMatrix([ints[i * n : (i + 1) * n] for i in range(n)])
    lead = None
    for x in entries:
        if x != 0:
            lead = x
            break
    if lead is None:
        raise InputError("zero matrix")
    inv = lead.inverse() if isinstance(lead, QuadElem) else Fraction(1) / lead
    return QMatrix([[x * inv for x in row] for row in M.entries])


class ProjLinAuto:
    """Automorphism of P^n: an invertible matrix modulo scalars.

    Stored as the canonical scalar representative: primitive integers with
    positive first nonzero entry over Q, or first nonzero entry scaled to 1
    over Q(sqrt d).  Equality and hashing use that representative.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: QMatrix):
        if not isinstance(matrix, QMatrix):
            matrix = QMatrix(matrix)
        norm = _normalize_matrix(matrix)
        if norm.det() == 0:
            raise InputError("matrix is singular; not an automorphism")
        object.__setattr__(self, "matrix", norm)

    def __setattr__(self, *_):
        raise AttributeError("ProjLinAuto is immutable")

    @classmethod
    def identity(cls, n_ambient: int) -> "ProjLinAuto":
        return cls(QMatrix.identity(n_ambient))

    @property
    def size(self) -> int:
        return self.matrix.n

    @property
    def n(self) -> int:
        """Dimension of the projective space acted on."""
        return self.matrix.n - 1

    def compose(self, other: "ProjLinAuto") -> "ProjLinAuto":
        """self after other."""
        return ProjLinAuto(self.matrix * other.matrix)

    def inverse(self) -> "ProjLinAuto":
        return ProjLinAuto(self.matrix.inverse())

    def __pow__(self, e: int) -> "ProjLinAuto":
        if e == 0:
            return ProjLinAuto.identity(self.size)
        return ProjLinAuto(self.matrix**e)

    def apply(self, x: ProjPoint) -> ProjPoint:
        if x.n != self.n:
            raise InputError("dimension mismatch")
        return ProjPoint(self.matrix.apply(x.coords))

    def apply_vector(self, v):
        return self.matrix.apply(v)

    def is_identity(self) -> bool:
        n = self.size
        return self.matrix == QMatrix.identity(n) or all(
            self.matrix.entries[i][j] == (self.matrix.entries[0][0] if i == j else 0)
            for i in range(n)
            for j in range(n)
        )

    def to_p1map(self) -> P1Map:
        if self.n != 1:
            raise InputError("only 2x2 matrices act on P^1")
        (a, b), (c, d) = self.matrix.entries
        return P1Map([a, b], [c, d])

    def spec_string(self) -> str:
        rows = ",".join(
            "[" + ",".join(str(x) for x in row) + "]" for row in self.matrix.entries
        )
        return f"mat:[{rows}]"

    def __eq__(self, other):
        if isinstance(other, ProjLinAuto):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"ProjLinAuto({[list(r) for r in self.matrix.entries]})"


# ---------------------------------------------------------------------------
# affine automorphisms over Q(sqrt d)


class AffineAuto:
    """Invertible affine map x -> Ax + b on A^n over Q or Q(sqrt d)."""

    __slots__ = ("A", "b")

    def __init__(self, A: QMatrix, b):
        if not isinstance(A, QMatrix):
            A = QMatrix(A)
        if A.det() == 0:
            raise InputError("linear part is singular")
        b = tuple(x if isinstance(x, QuadElem) else as_rat(x) for x in b)
        if len(b) != A.n:
            raise InputError("translation length must match the matrix size")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *_):
        raise AttributeError("AffineAuto is immutable")

    @property
    def n(self) -> int:
        return self.A.n

    def embed(self) -> ProjLinAuto:
        """Projectivize as the block matrix [[A, b], [0, 1]]."""
        n = self.n
        rows = [list(self.A.entries[i]) + [self.b[i]] for i in range(n)]
        rows.append([Fraction(0)] * n + [Fraction(1)])
        return ProjLinAuto(QMatrix(rows))

    def compose(self, other: "AffineAuto") -> "AffineAuto":
        """self after other: x -> A1 A2 x + (A1 b2 + b1)."""
        A = QMatrix(mat_mul(self.A.entries, other.A.entries))
        Ab = mat_vec(self.A.entries, other.b)
        b = tuple(x + y for x, y in zip(Ab, self.b))
        return AffineAuto(A, b)

    def apply_affine(self, v):
        Av = mat_vec(self.A.entries, v)
        return tuple(x + y for x, y in zip(Av, self.b))

    def __eq__(self, other):
        if isinstance(other, AffineAuto):
            return self.A == other.A and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.A, self.b))

    def __repr__(self):
        return f"AffineAuto(A={[list(r) for r in self.A.entries]}, b={list(self.b)})"


# ---------------------------------------------------------------------------
# text-format parsing


def _parse_rat(tok: str, pos: str) -> Fraction:
    try:
        return Fraction(tok.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {tok!r} at {pos}") from None


def _split_top(text: str, sep: str = ",") -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _parse_bracket_list(text: str, pos: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise InputError(f"expected [...] at {pos}, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return []
    return _split_top(inner)


def _parse_quad_entry(tok: str, d: int, pos: str):
    tok = tok.strip()
    if tok.startswith("(") and tok.endswith(")"):
        parts = tok[1:-1].split(",")
        if len(parts) != 2:
            raise InputError(f"quadratic entry needs two parts at {pos}: {tok!r}")
        a = _parse_rat(parts[0], pos)
        b = _parse_rat(parts[1], pos)
        return QuadElem(a, b, d)
    return _parse_rat(tok, pos)


def parse_map_spec(text: str):
    """Parse a map in the text grammar; returns P1Map, ProjLinAuto, or
    AffineAuto.  Morphism and invertibility checks are applied."""
    text = text.strip()
    if text.startswith("p1:"):
        body = text[3:]
        halves = _split_top(body, "/")
        if len(halves) != 2:
            raise InputError(f"p1 spec needs numerator/denominator: {text!r}")
        num = [_parse_rat(t, f"numerator entry {i}") for i, t in
               enumerate(_parse_bracket_list(halves[0], "numerator"))]
        den = [_parse_rat(t, f"denominator entry {i}") for i, t in
               enumerate(_parse_bracket_list(halves[1], "denominator"))]
        if len(num) != len(den):
            raise InputError("numerator and denominator lists must have equal length")
        if len(num) < 2:
            raise InputError("p1 maps need degree >= 1 (two or more coefficients)")
        return P1Map.from_ascending(num, den)
    if text.startswith("mat:"):
        rows = _parse_bracket_list(text[4:], "matrix")
        entries = []
        for i, row in enumerate(rows):
            entries.append(
                [_parse_rat(t, f"row {i} entry {j}") for j, t in
                 enumerate(_parse_bracket_list(row, f"row {i}"))]
            )
        if not entries or any(len(r) != len(entries) for r in entries):
            raise InputError("matrix must be square and nonempty")
        return ProjLinAuto(QMatrix(entries))
    if text.startswith("aff"):
        head, _, body = text.partition(":")
        if not (head.startswith("aff(") and head.endswith(")")):
            raise InputError(f"affine spec must look like aff(d=2):..., got {text!r}")
        dspec = head[4:-1].strip()
        if not dspec.startswith("d="):
            raise InputError(f"affine spec needs d=<int>, got {head!r}")
        try:
            d = int(dspec[2:])
        except ValueError:
            raise InputError(f"bad d in {head!r}") from None
        parts = _split_top(body)
        A = b = None
        for part in parts:
            key, _, val = part.partition("=")
            key = key.strip()
            if key == "A":
                rows = _parse_bracket_list(val, "A")
                A = [
                    [_parse_quad_entry(t, d, f"A row {i} entry {j}") for j, t in
                     enumerate(_parse_bracket_list(row, f"A row {i}"))]
                    for i, row in enumerate(rows)
                ]
            elif key == "b":
                b = [_parse_quad_entry(t, d, f"b entry {i}") for i, t in
                     enumerate(_parse_bracket_list(val, "b"))]
            else:
                raise InputError(f"unknown affine field {key!r}")
        if A is None or b is None:
            raise InputError("affine spec needs both A=... and b=...")
        if not A or any(len(r) != len(A) for r in A):
            raise InputError("A must be square and nonempty")
        return AffineAuto(QMatrix(A), b)
    raise InputError(f"unrecognized map spec {text!r} (expected p1:, mat:, or aff)")
