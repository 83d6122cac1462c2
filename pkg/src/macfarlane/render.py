"""Deterministic SVG rendering of computed domains.

The input is the JSON form of a DomainState.  Each accepted side comes from
a central plane c_w*w + c_x*x + c_y*y + c_z*z' = 0 of the hyperboloid; in the
upper half-plane chart (a = b = 1) this is either the vertical line
u = -c_w/c_y (when c_w = c_x) or the semicircle
(u - u0)^2 + h^2 = r^2 with u0 = -c_y/(c_w - c_x),
r^2 = u0^2 - (c_w + c_x)/(c_w - c_x).  In 3D the same recipe, viewed from
above, gives lines and circles in the (u, v) plane with
v0 = -c_z/(sqrt(d) (c_w - c_x)).  Floats appear here only, at emission.
"""

import math
from fractions import Fraction

from .exactnum import rat

WIDTH, HEIGHT = 640, 420
MARGIN = 40


def _plane_coeffs(hs):
    A = [rat(c) for c in hs["plane"]["coeffs"]]
    rhs = rat(hs["plane"]["rhs"])
    cw = -rhs
    cx, cy = A[0], A[1]
    cz = A[2] if len(A) > 2 else Fraction(0)
    return cw, cx, cy, cz


def side_geometry(hs, dim, d):
    """("line", u0, v_dir) or ("circle", u0, v0, r) in chart coordinates."""
    cw, cx, cy, cz = _plane_coeffs(hs)
    if cw == cx:
        if dim == 2 or cz == 0:
            if cy == 0:
                raise ValueError("degenerate side plane")
            return ("vline", Fraction(-cw, 1) / cy, None, None)
        # vertical plane cy*u + (cz/sqrt(d))*v + cw = 0, seen from above
        return ("line", float(cy), float(cz) / math.sqrt(d), float(cw))
    den = cw - cx
    u0 = -cy / den
    v0f = -float(cz) / (math.sqrt(d) * float(den)) if dim == 3 else 0.0
    r2 = float(u0) * float(u0) + v0f * v0f - float((cw + cx) / den)
    if r2 <= 0:
        raise ValueError("side plane misses the chart")
    return ("circle", float(u0), v0f, math.sqrt(r2))


def _extent(geoms):
    lo, hi = -1.0, 1.0
    for g in geoms:
        if g[0] == "vline":
            lo, hi = min(lo, float(g[1])), max(hi, float(g[1]))
        elif g[0] == "circle":
            lo = min(lo, g[1] - g[3])
            hi = max(hi, g[1] + g[3])
    pad = 0.25 * (hi - lo)
    return lo - pad, hi + pad


def _fmt(x, precision):
    return ("%." + str(precision) + "f") % (x + 0.0)


def render_svg(doc, precision=4):
    """Emit an SVG 1.1 document for a DomainState JSON object."""
    dim = doc["dim"]
    sides = [h for h in doc["halfspaces"] if h["status"] == "side"]
    if not sides:
        raise ValueError("domain state has no sides to render")
    d = int(doc.get("desc", {}).get("d", 1))
    geoms = [side_geometry(h, dim, d) for h in sides]
    lo, hi = _extent(geoms)
    scale = (WIDTH - 2 * MARGIN) / (hi - lo)

    def X(u):
        return MARGIN + (u - lo) * scale

    def Y(h):
        return HEIGHT - MARGIN - h * scale

    P = lambda x: _fmt(x, precision)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (WIDTH, HEIGHT, WIDTH, HEIGHT),
        '<rect width="%d" height="%d" fill="white"/>' % (WIDTH, HEIGHT),
        '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" stroke-width="1"/>'
        % (P(0), P(Y(0)), P(WIDTH), P(Y(0))),
    ]
    anchors = []
    for hs, g in zip(sides, geoms):
        label = "tr=%s" % hs["trace"]
        if g[0] == "vline":
            x = X(float(g[1]))
            out.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="blue" stroke-width="1.5"/>'
                % (P(x), P(Y(0)), P(x), P(MARGIN))
            )
            anchors.append((x, (Y(0) + MARGIN) / 2))
            out.append('<text x="%s" y="%s" font-size="11">%s</text>'
                       % (P(x + 3), P(MARGIN + 12), label))
        elif g[0] == "line":
            a, b, c = g[1], g[2], g[3]
            # a*u + b*v + c = 0 across the viewport
            pts = []
            if abs(b) > abs(a):
                for u in (lo, hi):
                    pts.append((u, -(a * u + c) / b))
            else:
                for v in (lo, hi):
                    pts.append((-(b * v + c) / a, v))
            (u1, v1), (u2, v2) = pts
            out.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="blue" stroke-width="1.5"/>'
                % (P(X(u1)), P(Y(v1)), P(X(u2)), P(Y(v2)))
            )
            anchors.append((X((u1 + u2) / 2), Y((v1 + v2) / 2)))
            out.append('<text x="%s" y="%s" font-size="11">%s</text>'
                       % (P(X(u1) + 3), P(Y(v1) - 3), label))
        else:
            _, u0, v0, r = g
            if dim == 2:
                out.append(
                    '<path d="M %s %s A %s %s 0 0 1 %s %s" fill="none" '
                    'stroke="blue" stroke-width="1.5"/>'
                    % (P(X(u0 - r)), P(Y(0)), P(r * scale), P(r * scale),
                       P(X(u0 + r)), P(Y(0)))
                )
                anchors.append((X(u0), Y(r)))
                out.append('<text x="%s" y="%s" font-size="11">%s</text>'
                           % (P(X(u0)), P(Y(r) - 5), label))
            else:
                out.append(
                    '<circle cx="%s" cy="%s" r="%s" fill="none" '
                    'stroke="blue" stroke-width="1.5"/>'
                    % (P(X(u0)), P(Y(v0)), P(r * scale))
                )
                anchors.append((X(u0), Y(v0)))
                out.append('<text x="%s" y="%s" font-size="11">%s</text>'
                           % (P(X(u0)), P(Y(v0) - r * scale - 5), label))
    # pairing arrows between matched sides
    index_of = {}
    for k, hs in enumerate(doc["halfspaces"]):
        if hs["status"] == "side":
            index_of[k] = len(index_of)
    drawn = set()
    for pr in doc.get("pairings", []):
        i, j = pr["side"], pr.get("partner")
        if j is None or (j, i) in drawn or i not in index_of or j not in index_of:
            continue
        drawn.add((i, j))
        (x1, y1), (x2, y2) = anchors[index_of[i]], anchors[index_of[j]]
        out.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="red" '
            'stroke-width="0.8" stroke-dasharray="4 3" marker-end="url(#arr)"/>'
            % (P(x1), P(y1), P(x2), P(y2))
        )
    out.insert(3, '<defs><marker id="arr" markerWidth="8" markerHeight="8" '
                  'refX="6" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z" '
                  'fill="red"/></marker></defs>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
