"""Trace-ordered Dirichlet-domain engine.

The search enumerates the dagger-symmetric group elements (the group's
intersection with its own hyperboloid model) shell by shell in increasing
trace, deduplicates geodesic directions by slope, factors each element g as
g = w w^dagger by a word search (then the bisector of the orbit point g
itself is a candidate side, contributed by w), or failing that uses that
g^2 = g g^dagger is an orbit point whose bisector passes through g
(contributed by g).  Candidate half-spaces accumulate in an exact Klein-chart
polytope; final statuses are side / midpoint-witness / redundant.
"""

import json
from collections import namedtuple
from fractions import Fraction
from math import gcd, isqrt

from .exactnum import QuadNum, format_quad, format_rat, rat
from .hypmodel import HypPoint, act, bisector, pairing, to_klein, to_uhs
from .polytope import Polytope, normalize_constraint
from .quatalg import AlgebraDesc, GroupElem, Mat2, Quat, from_matrix, to_matrix


# ---------------------------------------------------------------------------
# Group input
# ---------------------------------------------------------------------------

class GroupInput:
    """A finitely generated group with a membership strategy.

    membership: ("ambient-diophantine", predicate_id) admits shell points by
    a lattice predicate; ("word-bfs", depth) admits exactly the elements found
    in the breadth-first ball of that radius (others are reported undecided).
    """

    def __init__(self, desc, generators, membership, conj_closed, dim, name=""):
        self.desc = desc
        self.generators = list(generators)
        self.membership = membership
        self.conj_closed = bool(conj_closed)
        self.dim = dim
        self.name = name
        self._balls = {}

    @staticmethod
    def from_json(obj):
        desc = AlgebraDesc.from_json(obj["desc"])
        gens = []
        for g in obj["generators"]:
            if "matrix" in g:
                rows = g["matrix"]
                M = Mat2(((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])), desc)
                q = from_matrix(M, desc)
            else:
                q = Quat.from_json(g, desc)
            gens.append(GroupElem(q))
        mem = obj["membership"]
        if mem["strategy"] == "ambient-diophantine":
            membership = ("ambient-diophantine", mem["predicate"])
        elif mem["strategy"] == "word-bfs":
            membership = ("word-bfs", int(mem.get("depth", 6)))
        else:
            raise ValueError("unknown membership strategy %r" % mem["strategy"])
        return GroupInput(
            desc, gens, membership, obj.get("conj_closed", False),
            int(obj["dim"]), obj.get("name", ""),
        )

    @staticmethod
    def load(path):
        with open(path, "r", encoding="utf-8") as fh:
            return GroupInput.from_json(json.load(fh))

    def ball(self, depth):
        """Breadth-first ball of the generated group, as canonical elements."""
        if depth in self._balls:
            return self._balls[depth]
        letters = []
        for g in self.generators:
            if g not in letters:
                letters.append(g)
            gi = g.inverse()
            if gi not in letters:
                letters.append(gi)
        seen = {GroupElem.identity(self.desc)}
        frontier = list(seen)
        for _ in range(depth):
            new = []
            for w in frontier:
                for s in letters:
                    nxt = w * s
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        self._balls[depth] = seen
        return seen

    def factor_map(self, depth):
        """Map orbit-point coordinates -> the word w with w w^dagger there."""
        key = ("factors", depth)
        if key in self._balls:
            return self._balls[key]
        table = {}
        for w in self.ball(depth):
            p = w.q * w.q.dagger()
            try:
                pt = HypPoint.from_quat(p, self.dim)
            except ValueError:
                continue
            k = pt.coords()
            old = table.get(k)
            if old is None or _elem_sort_key(w) < _elem_sort_key(old):
                table[k] = w
        self._balls[key] = table
        return table


def _elem_sort_key(g):
    return tuple((c.re, c.im) for c in g.q.coords())


# ---------------------------------------------------------------------------
# Trace shells
# ---------------------------------------------------------------------------

TraceShell = namedtuple("TraceShell", ["t2", "points"])  # t2 = 2 * trace


def _two_squares(n, d):
    """All (m, nn) with m^2 + d*nn^2 = n, integers."""
    out = []
    bound = isqrt(n // d) if d else 0
    for nn in range(-bound, bound + 1):
        rem = n - d * nn * nn
        if rem < 0:
            continue
        m = isqrt(rem)
        if m * m == rem:
            out.append((m, nn))
            if m:
                out.append((-m, nn))
    return out


def shell_solutions(desc, t2, context, dim=None):
    """All lattice points on the trace shell 2*tr = t2 (complete, finite)."""
    if t2 <= 4:
        raise ValueError("shells exist only for trace > 2")
    points = []
    if context == "modular-integers":
        if t2 % 2 == 0:
            t = t2 // 2
            for x in range(0, t + 1):
                rem = t * x - 1 - x * x
                if rem < 0:
                    continue
                y = isqrt(rem)
                if y * y != rem:
                    continue
                for yy in ({y, -y} if y else {0}):
                    points.append(
                        HypPoint(Fraction(t, 2), Fraction(t - 2 * x, 2), yy, 0, desc, 2)
                    )
    elif context == "bianchi-integers":
        if t2 % 2 == 0:
            t = t2 // 2
            d = desc.d
            half = d % 4 == 3
            for r in range(1, t):
                n = r * (t - r) - 1
                if n < 0:
                    continue
                sols = _two_squares(4 * n if half else n, d)
                for m, nn in sols:
                    if half:
                        if (m - nn) % 2:
                            continue
                        re_s, im_s = Fraction(m, 2), Fraction(nn, 2)
                    else:
                        re_s, im_s = Fraction(m), Fraction(nn)
                    points.append(
                        HypPoint(
                            Fraction(t, 2), Fraction(t - 2 * r, 2), re_s, -im_s, desc, 3
                        )
                    )
    else:
        raise ValueError("unsupported integrality context %r" % (context,))
    uniq = sorted(set(points), key=lambda p: (p.x, p.y, p.zp))
    return TraceShell(t2, uniq)


# ---------------------------------------------------------------------------
# Membership and factorization
# ---------------------------------------------------------------------------

def filter_group_points(shell, group, bfs_depth=None):
    """Split shell points into admitted group members and undecided ones."""
    strategy, arg = group.membership
    members, undecided = [], []
    for p in shell.points:
        if strategy == "ambient-diophantine":
            # the shell enumeration already realizes the ambient lattice
            # predicate (integral symmetric matrices of determinant 1 and
            # trace > 2, hence non-elliptic), so every point is admitted
            members.append(p)
        else:
            depth = bfs_depth if bfs_depth is not None else arg
            if GroupElem(p.quat()) in group.ball(depth):
                members.append(p)
            else:
                undecided.append(p)
    return members, undecided


Factored = namedtuple("Factored", ["status", "word"])


def orbit_factor(p, group, depth):
    """Try to write the shell point as w w^dagger for a word w."""
    table = group.factor_map(depth)
    w = table.get(p.coords())
    if w is not None:
        return Factored("factored", w)
    return Factored("not-factored", None)


# ---------------------------------------------------------------------------
# Slopes
# ---------------------------------------------------------------------------

def slope_key(p):
    """Normalized direction class [x : y : z'] scaled by positive rationals."""
    comps = (rat(p.x), rat(p.y), rat(p.zp)) if isinstance(p, HypPoint) else tuple(map(rat, p))
    if not any(comps):
        raise ValueError("central element has no slope")
    lcm = 1
    for c in comps:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in comps]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


# ---------------------------------------------------------------------------
# Domain state
# ---------------------------------------------------------------------------

SideRecord = namedtuple(
    "SideRecord",
    ["plane", "contributor", "orbit_point", "midpoint", "route", "trace2", "status"],
)

LedgerRow = namedtuple(
    "LedgerRow",
    ["trace2", "point", "slope", "in_orbit", "slope_duplicate", "factor_word"],
)


def _ceil_sqrt_frac(x):
    """Smallest integer n with n^2 >= x (x a positive rational)."""
    x = Fraction(x)
    n = isqrt(x.numerator // x.denominator)
    while Fraction(n * n) < x:
        n += 1
    return n


def klein_bounds(desc, dim):
    """Tight rational box enclosing the Klein ellipsoid."""
    coeffs = [desc.a, desc.b] + ([desc.a * desc.b * desc.d] if dim == 3 else [])
    bounds = []
    for c in coeffs:
        # smallest k/64 with (k/64)^2 >= 1/c
        k = _ceil_sqrt_frac(Fraction(64 * 64, 1) / c)
        bounds.append(Fraction(k, 64))
    return bounds


class DomainState:
    """Evolving Dirichlet polytope with attributions, slopes and pairings."""

    def __init__(self, group):
        self.group = group
        self.dim = group.dim
        self.polytope = Polytope(klein_bounds(group.desc, group.dim))
        self.records = []
        self.ledger = []
        self.undecided = []
        self.slopes = {}
        self.snapshots = []
        self.pairings = None

    def _klein_plane(self, b):
        cx, cy, czp, rhs = b.klein_inequality()
        coeffs = (cx, cy, czp)[: self.dim] if self.dim == 3 else (cx, cy)
        return normalize_constraint(coeffs, rhs)

    def add_halfspace(self, contributor, orbit_point, midpoint, route, t2):
        b = bisector(orbit_point)
        coeffs, rhs = self._klein_plane(b)
        active = self.polytope.add(coeffs, rhs, tag=len(self.records))
        status = "pending" if active else "redundant"
        self.records.append(
            SideRecord((coeffs, rhs), contributor, orbit_point, midpoint, route, t2, status)
        )

    def finalize(self):
        from .polytope import Halfspace

        final = []
        for rec in self.records:
            status = rec.status
            if status != "redundant":
                h = Halfspace(rec.plane[0], rec.plane[1])
                if self.polytope.supports_facet(h):
                    status = "side"
                elif rec.route == "midpoint" and rec.midpoint is not None and (
                    self.polytope.contains(_klein_tuple(rec.midpoint, self.dim))
                ):
                    status = "midpoint-witness"
                else:
                    status = "redundant"
            final.append(rec._replace(status=status))
        self.records = final
        self.pairings = side_pairings(self)

    def sides(self):
        return [r for r in self.records if r.status == "side"]


def _klein_tuple(p, dim):
    k = to_klein(p)
    return (k.k1, k.k2, k.k3)[:dim] if dim == 3 else (k.k1, k.k2)


def compute_domain(group, max_trace, bfs_depth=6):
    """Run the trace sweep and return the finalized DomainState."""
    if max_trace <= 2:
        raise ValueError("max_trace must exceed 2")
    strategy, arg = group.membership
    context = arg if strategy == "ambient-diophantine" else (
        "modular-integers" if group.dim == 2 else "bianchi-integers"
    )
    state = DomainState(group)
    center = HypPoint.center(group.desc, group.dim)
    state.ledger.append(
        LedgerRow(4, center, (), True, False, GroupElem.identity(group.desc))
    )
    for t2 in range(5, 2 * max_trace + 1):
        try:
            shell = shell_solutions(group.desc, t2, context, group.dim)
        except ValueError:
            continue
        if not shell.points:
            continue
        members, undecided = filter_group_points(shell, group, bfs_depth)
        state.undecided.extend(undecided)
        for p in members:
            key = slope_key(p)
            dup = key in state.slopes and state.slopes[key] < t2
            if key not in state.slopes:
                state.slopes[key] = t2
            fact = orbit_factor(p, group, bfs_depth)
            state.ledger.append(
                LedgerRow(t2, p, key, fact.status == "factored", dup, fact.word)
            )
            if dup:
                continue
            if fact.status == "factored":
                state.add_halfspace(fact.word, p, None, "factored", t2)
            else:
                g = GroupElem(p.quat())
                p2 = act(g, HypPoint.center(group.desc, group.dim))
                state.add_halfspace(g, p2, p, "midpoint", t2)
        state.snapshots.append((t2, frozenset(state.polytope.vertices)))
    state.finalize()
    return state


def side_pairings(state):
    """Pair each side with the side its inverse isometry contributes."""
    plane_of = {}
    for idx, rec in enumerate(state.records):
        if rec.status == "side":
            plane_of[rec.plane] = idx
    table = []
    for idx, rec in enumerate(state.records):
        if rec.status != "side":
            continue
        inv = rec.contributor.inverse()
        partner_pt = act(inv, HypPoint.center(state.group.desc, state.dim))
        b = bisector(partner_pt)
        key = state._klein_plane(b)
        partner = plane_of.get(key)
        table.append((idx, partner))
    return table


# ---------------------------------------------------------------------------
# Frobenius check
# ---------------------------------------------------------------------------

def frobenius_check(g):
    """tr(g g^dagger), asserted equal to the entry-magnitude sum of the bridge.

    Needs a chart where the bridge matrix has plain K entries (a, b rational
    squares), which covers both bundled fixtures.
    """
    val = (g.q * g.q.dagger()).trace()
    M = to_matrix(g.q)
    total = QuadNum(0)
    for r in (0, 1):
        for c in (0, 1):
            e = M.e[r][c].pure_scalar()
            if e is None:
                raise ValueError("entry magnitudes need rational sqrt(a), sqrt(b)")
            total = total + e * e.conj()
    if total != val:
        raise AssertionError(
            "Frobenius identity violated: tr(g g^dagger)=%s, entry sum=%s"
            % (format_quad(val), format_quad(total))
        )
    return val


# ---------------------------------------------------------------------------
# Report serialization
# ---------------------------------------------------------------------------

def _format_radentry(e):
    s = e.pure_scalar()
    if s is not None:
        return format_quad(s)
    names = ["", "*sqrt(a)", "*sqrt(b)", "*sqrt(ab)"]
    parts = []
    for coef, nm in zip(e.s, names):
        if coef:
            parts.append("(%s)%s" % (format_quad(coef), nm))
    return "+".join(parts) if parts else "0"


def matrix_json(p):
    M = to_matrix(p.quat() if isinstance(p, HypPoint) else p)
    return [[_format_radentry(M.e[r][c]) for c in (0, 1)] for r in (0, 1)]


def iota_json(p):
    u, v, h = to_uhs(p)
    return {"u": format_quad(u), "v": format_quad(v), "h": format_quad(h)}


def ledger_json(state):
    rows = []
    for row in state.ledger:
        p = row.point
        rows.append({
            "trace": format_rat(Fraction(row.trace2, 2)),
            "quaternion": p.to_json(),
            "slope": list(row.slope),
            "matrix": matrix_json(p),
            "iota": iota_json(p),
            "in_orbit": row.in_orbit,
            "slope_duplicate": row.slope_duplicate,
        })
    return rows


def state_json(state):
    sides = []
    for idx, rec in enumerate(state.records):
        entry = {
            "plane": {
                "coeffs": [format_rat(c) for c in rec.plane[0]],
                "rhs": format_rat(rec.plane[1]),
            },
            "status": rec.status,
            "route": rec.route,
            "trace": format_rat(Fraction(rec.trace2, 2)),
            "contributor": rec.contributor.q.to_json(),
            "orbit_point": rec.orbit_point.to_json(),
        }
        if rec.midpoint is not None:
            entry["midpoint"] = rec.midpoint.to_json()
        sides.append(entry)
    return {
        "group": state.group.name,
        "dim": state.dim,
        "desc": state.group.desc.to_json(),
        "ledger": ledger_json(state),
        "halfspaces": sides,
        "pairings": [
            {"side": i, "partner": j, "paired": j is not None}
            for i, j in (state.pairings or [])
        ],
        "undecided": [p.to_json() for p in state.undecided],
        "vertices": [
            [format_rat(c) for c in v] for v in sorted(state.polytope.vertices)
        ],
    }
