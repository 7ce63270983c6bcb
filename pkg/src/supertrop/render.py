"""Static SVG pictures of planar complexes.

Cells are clipped to a rational box exactly; only the final pixel
coordinates are rounded, by exact decimal formatting, so output is
byte-for-byte reproducible.
"""

from fractions import Fraction
from functools import cmp_to_key

SIZE = 400
DEFAULT_BOX = (Fraction(-5), Fraction(5), Fraction(-5), Fraction(5))


def _dec(q, places=3):
    """Exact half-up decimal string of a rational."""
    q = Fraction(q)
    scale = 10 ** places
    v = q * scale
    r = (v.numerator * 2 + v.denominator) // (2 * v.denominator)
    sign = "-" if r < 0 else ""
    r = abs(r)
    whole, frac = divmod(r, scale)
    s = "%s%d.%0*d" % (sign, whole, places, frac)
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def _ok(rows, eqs, p):
    x, y = p
    return (all(r[0] + r[1] * x + r[2] * y >= 0 for r in rows)
            and all(r[0] + r[1] * x + r[2] * y == 0 for r in eqs))


def clip_vertices(cell, box):
    """Vertices of cell intersected with the box, in boundary order."""
    x0, x1, y0, y1 = box
    rows = [tuple(Fraction(v) for v in r) for r in cell.ges]
    rows += [(-x0, Fraction(1), Fraction(0)), (x1, Fraction(-1), Fraction(0)),
             (-y0, Fraction(0), Fraction(1)), (y1, Fraction(0), Fraction(-1))]
    eqs = [tuple(Fraction(v) for v in r) for r in cell.eqs]
    lines = eqs + rows
    pts = set()
    if cell.dim == 0:
        p = tuple(Fraction(v) for v in cell.point)
        return [p] if _ok(rows, eqs, p) else []
    for i in range(len(lines)):
        a = lines[i]
        for j in range(i + 1, len(lines)):
            b = lines[j]
            det = a[1] * b[2] - a[2] * b[1]
            if det == 0:
                continue
            x = (-a[0] * b[2] + a[2] * b[0]) / det
            y = (-a[1] * b[0] + a[0] * b[1]) / det
            if _ok(rows, eqs, (x, y)):
                pts.add((x, y))
    pts = sorted(pts)
    if len(pts) < 3:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cr = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(pts, key=cmp_to_key(cmp))


def render_svg(cx, box=DEFAULT_BOX):
    if cx.n != 2:
        raise ValueError("render needs n = 2, got n = %d" % cx.n)
    x0, x1, y0, y1 = (Fraction(v) for v in box)
    if not (x0 < x1 and y0 < y1):
        raise ValueError("empty bounding box")
    sx = Fraction(SIZE) / (x1 - x0)
    sy = Fraction(SIZE) / (y1 - y0)

    def px(p):
        return "%s,%s" % (_dec((p[0] - x0) * sx), _dec((y1 - p[1]) * sy))

    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (SIZE, SIZE, SIZE, SIZE),
           '<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (SIZE, SIZE)]
    # axes
    if x0 <= 0 <= x1:
        out.append('<line x1="%s" y1="0" x2="%s" y2="%d" stroke="#999" '
                   'stroke-width="1"/>' % (_dec(-x0 * sx), _dec(-x0 * sx), SIZE))
    if y0 <= 0 <= y1:
        out.append('<line x1="0" y1="%s" x2="%d" y2="%s" stroke="#999" '
                   'stroke-width="1"/>' % (_dec(y1 * sy), SIZE, _dec(y1 * sy)))
    for cell in sorted(cx.cells, key=lambda c: (-c.dim, c.sort_key())):
        vs = clip_vertices(cell, (x0, x1, y0, y1))
        if not vs:
            continue
        if cell.dim == 2 and len(vs) >= 3:
            out.append('<polygon points="%s" fill="#9ecae1" fill-opacity="0.6" '
                       'stroke="none"/>' % " ".join(px(p) for p in vs))
        elif cell.dim == 1 and len(vs) >= 2:
            a, b = vs[0], vs[-1]
            out.append('<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#08519c" '
                       'stroke-width="3"/>' % tuple(px(a).split(",") + px(b).split(",")))
        elif cell.dim == 0:
            x, y = px(vs[0]).split(",")
            out.append('<circle cx="%s" cy="%s" r="4" fill="#a50f15"/>' % (x, y))
    out.append("</svg>")
    return "\n".join(out) + "\n"
