"""Quaternion algebras (a,b/K) over imaginary quadratic fields K = Q(sqrt(-d)).

Implements the algebra arithmetic (i^2 = a, j^2 = b, ij = -ji), the standard
conjugate/norm/trace, the second-kind involution dagger whose fixed space is
the rank-4 quadratic space of signature (1,3), rational Hilbert symbols and
ramification sets, the structure-constant normalization predicate, and the
exact bridge to 2x2 matrices over K(sqrt(a), sqrt(b)) in a formal radical
basis {1, sqrt(a), sqrt(b), sqrt(ab)}.
"""

from fractions import Fraction

from .exactnum import (
    QuadNum,
    format_quad,
    is_squarefree,
    parse_quad,
    rat,
    rational_sqrt,
)


class AlgebraDesc:
    """Structure constants (a, b) over K = Q(sqrt(-d))."""

    __slots__ = ("d", "a", "b")

    def __init__(self, d, a, b):
        if not isinstance(d, int) or d <= 0 or not is_squarefree(d):
            raise ValueError("d must be a positive squarefree integer, got %r" % (d,))
        a, b = rat(a), rat(b)
        if a == 0 or b == 0:
            raise ValueError("structure constants must be nonzero")
        self.d, self.a, self.b = d, a, b

    @property
    def m(self):
        """Radicand of K (negative)."""
        return -self.d

    def is_normalized(self):
        return self.a > 0 and self.b > 0

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraDesc)
            and (self.d, self.a, self.b) == (other.d, other.a, other.b)
        )

    def __hash__(self):
        return hash((self.d, self.a, self.b))

    def __repr__(self):
        return "AlgebraDesc(d=%d, a=%s, b=%s)" % (self.d, self.a, self.b)

    def to_json(self):
        return {"d": self.d, "a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(obj):
        return AlgebraDesc(int(obj["d"]), rat(obj["a"]), rat(obj["b"]))

    def scalar(self, value):
        """Coerce a rational/str/QuadNum into K = Q(sqrt(-d))."""
        if isinstance(value, QuadNum):
            if value.im != 0 and value.m != self.m:
                raise ValueError("scalar not in Q(sqrt(%d))" % self.m)
            return value
        if isinstance(value, str):
            return parse_quad(value)
        return QuadNum(rat(value))


class Quat:
    """Quaternion w + x i + y j + z ij with coordinates in K."""

    __slots__ = ("w", "x", "y", "z", "desc")

    def __init__(self, w, x, y, z, desc):
        self.desc = desc
        self.w = desc.scalar(w)
        self.x = desc.scalar(x)
        self.y = desc.scalar(y)
        self.z = desc.scalar(z)

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def _check(self, other):
        if self.desc != other.desc:
            raise ValueError("descriptor mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, Quat)
            and self.desc == other.desc
            and self.coords() == other.coords()
        )

    def __hash__(self):
        return hash((self.coords(), self.desc))

    def __add__(self, other):
        self._check(other)
        return Quat(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z, self.desc
        )

    def __sub__(self, other):
        self._check(other)
        return Quat(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z, self.desc
        )

    def __neg__(self):
        return Quat(-self.w, -self.x, -self.y, -self.z, self.desc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadNum)):
            s = self.desc.scalar(other)
            return Quat(self.w * s, self.x * s, self.y * s, self.z * s, self.desc)
        self._check(other)
        a, b = self.desc.a, self.desc.b
        w1, x1, y1, z1 = self.coords()
        w2, x2, y2, z2 = other.coords()
        return Quat(
            w1 * w2 + a * (x1 * x2) + b * (y1 * y2) - a * b * (z1 * z2),
            w1 * x2 + x1 * w2 - b * (y1 * z2) + b * (z1 * y2),
            w1 * y2 + y1 * w2 + a * (x1 * z2) - a * (z1 * x2),
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
            self.desc,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadNum)):
            return self * other
        return NotImplemented

    def conj(self):
        """Standard quaternion conjugate q* = w - xi - yj - zij."""
        return Quat(self.w, -self.x, -self.y, -self.z, self.desc)

    def norm(self):
        """Reduced norm n(q) = q q* = w^2 - a x^2 - b y^2 + ab z^2."""
        a, b = self.desc.a, self.desc.b
        return (
            self.w * self.w
            - a * (self.x * self.x)
            - b * (self.y * self.y)
            + a * b * (self.z * self.z)
        )

    def trace(self):
        return self.w + self.w

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("non-invertible quaternion")
        c = self.conj()
        ninv = n.inverse()
        return Quat(c.w * ninv, c.x * ninv, c.y * ninv, c.z * ninv, self.desc)

    def dagger(self):
        """Second-kind involution: conjugate coordinates over K, negate z."""
        if not self.desc.is_normalized():
            raise ValueError("dagger requires a normalized descriptor (a, b > 0)")
        return Quat(self.w.conj(), self.x.conj(), self.y.conj(), -self.z.conj(), self.desc)

    def is_dagger_symmetric(self):
        return self.dagger() == self

    def __repr__(self):
        return "Quat(%s, %s, %s, %s)" % tuple(format_quad(c) for c in self.coords())

    def to_json(self):
        return {
            "w": format_quad(self.w),
            "x": format_quad(self.x),
            "y": format_quad(self.y),
            "z": format_quad(self.z),
        }

    @staticmethod
    def from_json(obj, desc):
        return Quat(
            parse_quad(obj["w"]), parse_quad(obj["x"]), parse_quad(obj["y"]),
            parse_quad(obj["z"]), desc,
        )

    @staticmethod
    def one(desc):
        return Quat(1, 0, 0, 0, desc)


def quat_arith(p, q, op):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError("unknown op %r" % (op,))


def quat_conj(q):
    return q.conj()


def quat_norm(q):
    return q.norm()


def quat_trace(q):
    return q.trace()


def dagger(q):
    return q.dagger()


def _canonical_coords(q):
    for c in q.coords():
        if c:
            if c.re > 0 or (c.re == 0 and c.im > 0):
                return q
            return -q
    return q


class GroupElem:
    """Projectivized norm-1 quaternion (sign-canonical representative of ±q)."""

    __slots__ = ("q",)

    def __init__(self, q):
        if q.norm() != QuadNum(1):
            raise ValueError("group elements must have reduced norm 1")
        self.q = _canonical_coords(q)

    @property
    def desc(self):
        return self.q.desc

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __mul__(self, other):
        return GroupElem(self.q * other.q)

    def inverse(self):
        return GroupElem(self.q.conj())

    def dagger(self):
        return GroupElem(self.q.dagger())

    def __repr__(self):
        return "GroupElem(%r)" % (self.q,)

    @staticmethod
    def identity(desc):
        return GroupElem(Quat.one(desc))


# ---------------------------------------------------------------------------
# Hilbert symbols over Q
# ---------------------------------------------------------------------------

INFINITE_PLACE = "inf"


def _squarefree_part(x):
    """Signed squarefree integer in the same rational square class as x."""
    x = rat(x)
    if x == 0:
        raise ValueError("zero has no square class")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                out *= p
        p += 1 if p == 2 else 2
    return sign * out * n


def _legendre(u, p):
    u %= p
    if u == 0:
        raise ValueError("legendre of a multiple of p")
    return 1 if pow(u, (p - 1) // 2, p) == 1 else -1


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def hilbert_symbol_rational(a, b, place):
    """+1 if a x^2 + b y^2 = 1 is solvable over Q_place, else -1."""
    a, b = _squarefree_part(a), _squarefree_part(b)
    if place in (INFINITE_PLACE, "oo", "infinity"):
        return -1 if (a < 0 and b < 0) else 1
    if not isinstance(place, int) or not _is_prime(place):
        raise ValueError("place must be a prime or the infinite place")
    p = place
    alpha, u = (0, a) if a % p else (1, a // p)
    beta, v = (0, b) if b % p else (1, b // p)
    if p != 2:
        sym = 1
        if alpha and beta and (p - 1) // 2 % 2 == 1:
            sym = -sym
        if beta:
            sym *= _legendre(u, p)
        if alpha:
            sym *= _legendre(v, p)
        return sym
    eps_u = ((u % 8) - 1) // 2 % 2
    eps_v = ((v % 8) - 1) // 2 % 2
    omega_u = (u * u - 1) // 8 % 2
    omega_v = (v * v - 1) // 8 % 2
    e = eps_u * eps_v + alpha * omega_v + beta * omega_u
    return -1 if e % 2 else 1


def ramification_set_rational(a, b):
    """All places where (a,b/Q) is a division algebra (even cardinality)."""
    a, b = _squarefree_part(a), _squarefree_part(b)
    candidates = {2}
    for c in (a, b):
        n = abs(c)
        p = 2
        while p * p <= n:
            if n % p == 0:
                candidates.add(p)
                while n % p == 0:
                    n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            candidates.add(n)
    ram = {p for p in candidates if hilbert_symbol_rational(a, b, p) == -1}
    if hilbert_symbol_rational(a, b, INFINITE_PLACE) == -1:
        ram.add(INFINITE_PLACE)
    return ram


# ---------------------------------------------------------------------------
# Structure-constant normalization predicate
# ---------------------------------------------------------------------------

class MacVerdict:
    """Result of the normalization predicate: status yes/undecided + payload."""

    __slots__ = ("status", "desc", "reason")

    def __init__(self, status, desc=None, reason=None):
        self.status, self.desc, self.reason = status, desc, reason

    def __repr__(self):
        return "MacVerdict(%r, %r, %r)" % (self.status, self.desc, self.reason)


def is_macfarlane(d, a, b):
    """Decide whether (a,b / Q(sqrt(-d))) carries the hyperboloid involution.

    Rational structure constants always qualify after sign normalization
    (a negative constant is replaced by -a*d, a square-class move over K);
    constants with a genuinely imaginary part are reported undecided.
    """
    if not isinstance(d, int) or d <= 0 or not is_squarefree(d):
        raise ValueError("base field must be imaginary quadratic Q(sqrt(-d)), d > 0 squarefree")
    vals = []
    for c in (a, b):
        if isinstance(c, str):
            c = parse_quad(c)
        if isinstance(c, QuadNum):
            if c.im != 0:
                return MacVerdict("undecided", reason="non-real structure constant")
            c = c.re
        c = rat(c)
        if c == 0:
            return MacVerdict("no", reason="structure constant is zero")
        vals.append(c)
    na = vals[0] if vals[0] > 0 else -vals[0] * d
    nb = vals[1] if vals[1] > 0 else -vals[1] * d
    return MacVerdict("yes", desc=AlgebraDesc(d, na, nb))


def extend_to_K(a, b, d):
    """Base-change rational constants to Q(sqrt(-d)), normalizing signs."""
    verdict = is_macfarlane(d, a, b)
    if verdict.status != "yes":
        raise ValueError("cannot extend: %s" % verdict.reason)
    return verdict.desc


# ---------------------------------------------------------------------------
# Matrix bridge in the formal radical basis {1, sqrt(a), sqrt(b), sqrt(ab)}
# ---------------------------------------------------------------------------

class RadEntry:
    """K-linear combination s0 + s1 sqrt(a) + s2 sqrt(b) + s3 sqrt(ab).

    When a or b is a rational square the corresponding radical folds into
    the rational part at construction, so e.g. a = b = 1 gives plain K values.
    """

    __slots__ = ("s", "desc")

    def __init__(self, s0, s1, s2, s3, desc):
        self.desc = desc
        s = [desc.scalar(s0), desc.scalar(s1), desc.scalar(s2), desc.scalar(s3)]
        ra = rational_sqrt(desc.a)
        rb = rational_sqrt(desc.b)
        if ra is not None:
            s[0], s[1] = s[0] + s[1] * ra, QuadNum(0)
            s[2], s[3] = s[2] + s[3] * ra, QuadNum(0)
        if rb is not None:
            s[0], s[2] = s[0] + s[2] * rb, QuadNum(0)
            s[1], s[3] = s[1] + s[3] * rb, QuadNum(0)
        self.s = tuple(s)

    @staticmethod
    def of(value, desc):
        if isinstance(value, RadEntry):
            return value
        return RadEntry(value, 0, 0, 0, desc)

    def __eq__(self, other):
        return isinstance(other, RadEntry) and self.s == other.s and self.desc == other.desc

    def __hash__(self):
        return hash((self.s, self.desc))

    def __add__(self, other):
        other = RadEntry.of(other, self.desc)
        return RadEntry(*(p + q for p, q in zip(self.s, other.s)), self.desc)

    def __neg__(self):
        return RadEntry(*(-c for c in self.s), self.desc)

    def __sub__(self, other):
        return self + (-RadEntry.of(other, self.desc))

    def __mul__(self, other):
        other = RadEntry.of(other, self.desc)
        a, b = self.desc.a, self.desc.b
        p0, p1, p2, p3 = self.s
        q0, q1, q2, q3 = other.s
        return RadEntry(
            p0 * q0 + a * (p1 * q1) + b * (p2 * q2) + a * b * (p3 * q3),
            p0 * q1 + p1 * q0 + b * (p2 * q3) + b * (p3 * q2),
            p0 * q2 + p2 * q0 + a * (p1 * q3) + a * (p3 * q1),
            p0 * q3 + p3 * q0 + p1 * q2 + p2 * q1,
            self.desc,
        )

    def conj(self):
        """Conjugate the K-coefficients (radicals fixed)."""
        return RadEntry(*(c.conj() for c in self.s), self.desc)

    def div_sqrt_a(self):
        a = self.desc.a
        s0, s1, s2, s3 = self.s
        return RadEntry(s1, s0 * (1 / a), s3, s2 * (1 / a), self.desc)

    def div_sqrt_b(self):
        b = self.desc.b
        s0, s1, s2, s3 = self.s
        return RadEntry(s2, s3, s0 * (1 / b), s1 * (1 / b), self.desc)

    def pure_scalar(self):
        """The K-value when all radical components vanish, else None."""
        if any(self.s[k] for k in (1, 2, 3)):
            return None
        return self.s[0]

    def __repr__(self):
        return "RadEntry(%s)" % ", ".join(format_quad(c) for c in self.s)


class Mat2:
    """2x2 matrix over K(sqrt(a), sqrt(b)) in the formal radical basis."""

    __slots__ = ("e", "desc")

    def __init__(self, entries, desc):
        self.desc = desc
        (s, t), (u, v) = entries
        self.e = (
            (RadEntry.of(desc.scalar(s) if not isinstance(s, RadEntry) else s, desc),
             RadEntry.of(desc.scalar(t) if not isinstance(t, RadEntry) else t, desc)),
            (RadEntry.of(desc.scalar(u) if not isinstance(u, RadEntry) else u, desc),
             RadEntry.of(desc.scalar(v) if not isinstance(v, RadEntry) else v, desc)),
        )

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.e == other.e and self.desc == other.desc

    def __mul__(self, other):
        (a, b), (c, d) = self.e
        (e, f), (g, h) = other.e
        return Mat2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), self.desc)

    def __add__(self, other):
        (a, b), (c, d) = self.e
        (e, f), (g, h) = other.e
        return Mat2(((a + e, b + f), (c + g, d + h)), self.desc)

    def det(self):
        (a, b), (c, d) = self.e
        return a * d - b * c

    def trace(self):
        return self.e[0][0] + self.e[1][1]

    def conj_transpose(self):
        (a, b), (c, d) = self.e
        return Mat2(((a.conj(), c.conj()), (b.conj(), d.conj())), self.desc)

    def __repr__(self):
        return "Mat2(%r)" % (self.e,)


def to_matrix(q):
    """Bridge map: w+xi+yj+zij to [[w - x ra, y rb - z rab], [y rb + z rab, w + x ra]]."""
    d = q.desc
    w, x, y, z = q.coords()
    s = RadEntry(w, -x, 0, 0, d)
    t = RadEntry(0, 0, y, -z, d)
    u = RadEntry(0, 0, y, z, d)
    v = RadEntry(w, x, 0, 0, d)
    return Mat2(((s, t), (u, v)), d)


def from_matrix(M, desc=None):
    """Inverse bridge map; errors if the matrix is not in the image."""
    if desc is None:
        desc = M.desc
    (s, t), (u, v) = M.e
    half = Fraction(1, 2)
    w = ((v + s) * half).pure_scalar()
    x = ((v - s) * half).div_sqrt_a().pure_scalar()
    y = ((u + t) * half).div_sqrt_b().pure_scalar()
    z = ((u - t) * half).div_sqrt_a().div_sqrt_b().pure_scalar()
    if any(c is None for c in (w, x, y, z)):
        raise ValueError("matrix is not in the image of the bridge map")
    return Quat(w, x, y, z, desc)
