"""Quaternion hyperboloid models and their coordinate charts.

A model point is a dagger-symmetric quaternion of norm 1 and positive trace:
w + xi + yj + z'*sqrt(-d)*ij with w, x, y, z' rational and
w^2 - a x^2 - b y^2 - a b d z'^2 = 1, w >= 1.  The 2D (Fuchsian) variant
forces z' = 0.  Charts: central (Klein) projection (x, y, z')/w, where
bisectors become affine inequalities, and the upper half-space chart
(y sqrt(b) + z' sqrt(abd) I + J)/(w + x sqrt(a)) when sqrt(a), sqrt(b) are
rational.  Isometries act by p -> g p g^dagger; an independent Moebius-action
oracle over Hamilton quaternions is provided for cross-checking.
"""

from collections import namedtuple

from .exactnum import QuadNum, format_rat, rat, rational_sqrt
from .quatalg import Quat, to_matrix


class HypPoint:
    """Point of the quaternion hyperboloid, stored as rational (w, x, y, z')."""

    __slots__ = ("w", "x", "y", "zp", "desc", "dim")

    def __init__(self, w, x, y, zp, desc, dim=3):
        if not desc.is_normalized():
            raise ValueError("hyperboloid requires normalized constants a, b > 0")
        self.w, self.x, self.y, self.zp = rat(w), rat(x), rat(y), rat(zp)
        self.desc, self.dim = desc, dim
        if dim == 2 and self.zp != 0:
            raise ValueError("2D model points have z' = 0")
        a, b, d = desc.a, desc.b, desc.d
        n = self.w ** 2 - a * self.x ** 2 - b * self.y ** 2 - a * b * d * self.zp ** 2
        if n != 1:
            raise ValueError("not on the hyperboloid: norm %s" % n)
        if self.w < 1:
            raise ValueError("wrong sheet: trace must be positive")

    def coords(self):
        return (self.w, self.x, self.y, self.zp)

    def quat(self):
        d = self.desc
        z = QuadNum(0, self.zp, d.m) if self.zp else QuadNum(0)
        return Quat(self.w, self.x, self.y, z, d)

    @staticmethod
    def from_quat(q, dim=3):
        coords = []
        for c in (q.w, q.x, q.y):
            if c.im != 0:
                raise ValueError("w, x, y must be real on the hyperboloid")
            coords.append(c.re)
        if q.z.re != 0:
            raise ValueError("z must be a rational multiple of sqrt(-d)")
        return HypPoint(coords[0], coords[1], coords[2], q.z.im, q.desc, dim)

    @staticmethod
    def center(desc, dim=3):
        return HypPoint(1, 0, 0, 0, desc, dim)

    def __eq__(self, other):
        return (
            isinstance(other, HypPoint)
            and self.desc == other.desc
            and self.coords() == other.coords()
        )

    def __hash__(self):
        return hash((self.coords(), self.desc))

    def __repr__(self):
        return "HypPoint(w=%s, x=%s, y=%s, zp=%s)" % tuple(
            format_rat(c) for c in self.coords()
        )

    def to_json(self):
        return {
            "w": format_rat(self.w),
            "x": format_rat(self.x),
            "y": format_rat(self.y),
            "zp": format_rat(self.zp),
        }

    @staticmethod
    def from_json(obj, desc, dim=3):
        return HypPoint(rat(obj["w"]), rat(obj["x"]), rat(obj["y"]), rat(obj["zp"]), desc, dim)


UHSPoint = namedtuple("UHSPoint", ["u", "v", "h"])  # u + v I + h J, h > 0
KleinPoint = namedtuple("KleinPoint", ["k1", "k2", "k3"])


def act(g, p):
    """Isometric action p -> g p g^dagger."""
    if g.desc != p.desc:
        raise ValueError("descriptor mismatch")
    q = g.q * p.quat() * g.q.dagger()
    return HypPoint.from_quat(q, p.dim)


def pairing(p, q):
    """Polar form of the norm: <p, q> = tr(p q*)/2, a rational."""
    if p.desc != q.desc:
        raise ValueError("descriptor mismatch")
    a, b, d = p.desc.a, p.desc.b, p.desc.d
    return (
        p.w * q.w - a * p.x * q.x - b * p.y * q.y - a * b * d * p.zp * q.zp
    )


def cosh_distance(p, q):
    """cosh of the hyperbolic distance; rational, >= 1, equal to 1 iff p = q."""
    if p.dim != q.dim:
        raise ValueError("dimension mismatch")
    return pairing(p, q)


# ---------------------------------------------------------------------------
# Klein chart
# ---------------------------------------------------------------------------

def to_klein(p):
    return KleinPoint(p.x / p.w, p.y / p.w, p.zp / p.w)


def from_klein(k, desc, dim=3):
    a, b, d = desc.a, desc.b, desc.d
    q = 1 - a * k.k1 ** 2 - b * k.k2 ** 2 - a * b * d * k.k3 ** 2
    if q <= 0:
        raise ValueError("point outside the ellipsoid")
    s = rational_sqrt(q)
    if s is None:
        raise ValueError("Klein point is not exactly representable on the hyperboloid")
    w = 1 / s
    return HypPoint(w, k.k1 * w, k.k2 * w, k.k3 * w, desc, dim)


# ---------------------------------------------------------------------------
# Bisectors
# ---------------------------------------------------------------------------

class Bisector(namedtuple("Bisector", ["cw", "cx", "cy", "czp", "desc"])):
    """Linear functional f(q) = <q, 1 - p>; the center 1 lies in {f <= 0}.

    In Klein coordinates the kept half-space is
    a x_p k1 + b y_p k2 + a b d z'_p k3 <= w_p - 1 (origin strictly inside).
    """

    def evaluate(self, p):
        return self.cw * p.w + self.cx * p.x + self.cy * p.y + self.czp * p.zp

    def klein_inequality(self):
        """(A1, A2, A3, rhs) with the kept side A . kappa <= rhs, rhs > 0."""
        return (self.cx, self.cy, self.czp, -self.cw)


def bisector(p):
    """Equidistant hyperplane between the center 1 and p (p != 1)."""
    if p.coords() == (1, 0, 0, 0):
        raise ValueError("bisector of the center is degenerate")
    a, b, d = p.desc.a, p.desc.b, p.desc.d
    return Bisector(1 - p.w, a * p.x, b * p.y, a * b * d * p.zp, p.desc)


# ---------------------------------------------------------------------------
# Upper half-space chart (requires sqrt(a), sqrt(b) rational)
# ---------------------------------------------------------------------------

def _chart_roots(desc):
    ra, rb = rational_sqrt(desc.a), rational_sqrt(desc.b)
    if ra is None or rb is None:
        raise ValueError("half-space chart needs rational sqrt(a), sqrt(b)")
    return ra, rb


def _times_sqrt_d(c, d):
    """Exact c * sqrt(d) as a QuadNum (rational when d is a square)."""
    rd = rational_sqrt(d)
    if rd is not None:
        return QuadNum(rat(c) * rd)
    return QuadNum(0, rat(c), d)


def to_uhs(p):
    """Chart (y sqrt(b) + z' sqrt(abd) I + J) / (w + x sqrt(a))."""
    ra, rb = _chart_roots(p.desc)
    denom = p.w + p.x * ra
    u = QuadNum(p.y * rb / denom)
    v = _times_sqrt_d(p.zp * ra * rb / denom, p.desc.d)
    h = QuadNum(1 / denom)
    return UHSPoint(u, v, h)


def from_uhs(pt, desc, dim=3):
    ra, rb = _chart_roots(desc)
    d = desc.d
    h = QuadNum.coerce(pt.h)
    if not h.is_rational() or h.re <= 0:
        raise ValueError("height must be a positive rational")
    hr = h.re
    u = QuadNum.coerce(pt.u)
    if not u.is_rational():
        raise ValueError("first coordinate not exactly representable")
    y = u.re / (hr * rb)
    v = QuadNum.coerce(pt.v)
    rd = rational_sqrt(d)
    if rd is not None:
        if not v.is_rational():
            raise ValueError("second coordinate not exactly representable")
        zp = v.re / (hr * ra * rb * rd)
    else:
        if v.re != 0 or (v.im != 0 and v.m != d):
            raise ValueError("second coordinate must be a rational multiple of sqrt(%d)" % d)
        zp = v.im / (hr * ra * rb)
    wpx = 1 / hr
    wmx = hr * (1 + desc.b * y ** 2 + desc.a * desc.b * d * zp ** 2)
    w = (wpx + wmx) / 2
    x = (wpx - wmx) / (2 * ra)
    return HypPoint(w, x, y, zp, desc, dim)


# ---------------------------------------------------------------------------
# Independent Moebius-action oracle on the half-space chart
# ---------------------------------------------------------------------------

def _ham_mul(p, q):
    t1, i1, j1, k1 = p
    t2, i2, j2, k2 = q
    return (
        t1 * t2 - i1 * i2 - j1 * j2 - k1 * k2,
        t1 * i2 + i1 * t2 + j1 * k2 - k1 * j2,
        t1 * j2 + j1 * t2 + k1 * i2 - i1 * k2,
        t1 * k2 + k1 * t2 + i1 * j2 - j1 * i2,
    )


def _ham_from_K(alpha, d):
    """Embed alpha in Q(sqrt(-d)) as alpha.re - alpha.im*sqrt(d)*I.

    The conjugate embedding is the one under which the Moebius action of the
    bridge matrix matches the chart image of the algebraic action.
    """
    return (QuadNum(alpha.re), -_times_sqrt_d(alpha.im, d), QuadNum(0), QuadNum(0))


def mobius_uhs(g, pt):
    """Moebius action of the bridge matrix of g on u + vI + hJ.

    Evaluated entirely in Hamilton quaternions over Q(sqrt(d)); this is an
    independent cross-check of the algebraic action `act`.
    """
    desc = g.desc
    _chart_roots(desc)
    M = to_matrix(g.q)
    entries = []
    for r in (0, 1):
        for c in (0, 1):
            val = M.e[r][c].pure_scalar()
            if val is None:
                raise ValueError("bridge matrix has irrational radical parts")
            entries.append(_ham_from_K(val, desc.d))
    alpha, beta, gamma, delta = entries
    zeta = (QuadNum.coerce(pt.u), QuadNum.coerce(pt.v), QuadNum.coerce(pt.h), QuadNum(0))
    num = tuple(a + b for a, b in zip(_ham_mul(alpha, zeta), beta))
    den = tuple(a + b for a, b in zip(_ham_mul(gamma, zeta), delta))
    n2 = sum((c * c for c in den), QuadNum(0))
    den_inv = (den[0] / n2, -den[1] / n2, -den[2] / n2, -den[3] / n2)
    res = _ham_mul(num, den_inv)
    if res[3] != QuadNum(0):
        raise ValueError("Moebius image left the half-space chart")
    return UHSPoint(res[0], res[1], res[2])
