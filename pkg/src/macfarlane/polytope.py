"""Exact incremental half-space intersection over rationals (2D and 3D).

Constraints are affine inequalities A . x <= r with Fraction coefficients.
The polytope is kept bounded by an initial box, and represented by its exact
vertex set; a new inequality is redundant iff every current vertex satisfies
it strictly.  Sizes here are tiny (tens of constraints), so the simple
O(n^3)-ish vertex updates are exact and fast.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def normalize_constraint(coeffs, rhs):
    """Scale by a positive rational to a primitive integer form (A, r)."""
    coeffs = tuple(Fraction(c) for c in coeffs)
    rhs = Fraction(rhs)
    denoms = [c.denominator for c in coeffs] + [rhs.denominator]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in coeffs] + [int(rhs * lcm)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1])


def _solve(rows, rhs):
    """Solve a square rational linear system; None if singular."""
    n = len(rows)
    m = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * p for v, p in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


class Halfspace:
    __slots__ = ("coeffs", "rhs", "tag")

    def __init__(self, coeffs, rhs, tag=None):
        self.coeffs, self.rhs = normalize_constraint(coeffs, rhs)
        self.tag = tag

    def value(self, point):
        return sum(c * x for c, x in zip(self.coeffs, point))

    def satisfied(self, point):
        return self.value(point) <= self.rhs

    def key(self):
        return (self.coeffs, self.rhs)

    def __repr__(self):
        return "Halfspace(%s <= %s, tag=%r)" % (self.coeffs, self.rhs, self.tag)


class Polytope:
    """Bounded convex region; starts as the box |x_i| <= bounds[i]."""

    def __init__(self, bounds):
        self.dim = len(bounds)
        self.constraints = []
        self._keys = set()
        for i, m in enumerate(bounds):
            m = Fraction(m)
            if m <= 0:
                raise ValueError("box bounds must be positive")
            e = [Fraction(0)] * self.dim
            e[i] = Fraction(1)
            self.constraints.append(Halfspace(tuple(e), m, tag="box"))
            e2 = [Fraction(0)] * self.dim
            e2[i] = Fraction(-1)
            self.constraints.append(Halfspace(tuple(e2), m, tag="box"))
        for h in self.constraints:
            self._keys.add(h.key())
        corners = [[]]
        for m in bounds:
            m = Fraction(m)
            corners = [c + [s] for c in corners for s in (-m, m)]
        self.vertices = {tuple(c) for c in corners}

    def contains(self, point, strict=False):
        for h in self.constraints:
            v = h.value(point)
            if v > h.rhs or (strict and v == h.rhs):
                return False
        return True

    def add(self, coeffs, rhs, tag=None):
        """Insert A.x <= rhs; returns False when exactly redundant."""
        h = Halfspace(coeffs, rhs, tag)
        if h.key() in self._keys:
            return False
        if all(h.value(v) < h.rhs for v in self.vertices):
            return False
        kept = {v for v in self.vertices if h.value(v) <= h.rhs}
        new_pts = set()
        for combo in combinations(self.constraints, self.dim - 1):
            rows = [h.coeffs] + [c.coeffs for c in combo]
            rhs_v = [h.rhs] + [c.rhs for c in combo]
            pt = _solve(rows, rhs_v)
            if pt is None:
                continue
            if all(c.value(pt) <= c.rhs for c in self.constraints):
                new_pts.add(pt)
        self.constraints.append(h)
        self._keys.add(h.key())
        self.vertices = kept | new_pts
        return True

    def supporting_vertices(self, h):
        return [v for v in self.vertices if h.value(v) == h.rhs]

    def supports_facet(self, h):
        """Does h touch the final region in a full-dimensional face?"""
        sup = self.supporting_vertices(h)
        if len(sup) < self.dim:
            return False
        if self.dim == 2:
            return len(set(sup)) >= 2
        # 3D: need three affinely independent supporting vertices
        base = sup[0]
        dirs = [tuple(a - b for a, b in zip(v, base)) for v in sup[1:]]
        for u, w in combinations(dirs, 2):
            cross = (
                u[1] * w[2] - u[2] * w[1],
                u[2] * w[0] - u[0] * w[2],
                u[0] * w[1] - u[1] * w[0],
            )
            if any(cross):
                return True
        return False
