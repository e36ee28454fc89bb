#!/usr/bin/env python3
"""Straight-line exact-rational oracle for chain propagation.

Independent of the C++ kernel: circumcenters by the closed-form determinant
formula, second intersections by reflecting across the line of centres.
Prints the values frozen into tests/test_chain.cpp and tests/test_conic.cpp.
"""
import json
import sys
from fractions import Fraction as F


def param_point(cx, cy, r, t):
    d = 1 + t * t
    return (cx + r * (1 - t * t) / d, cy + r * 2 * t / d)


def circumcenter(p, q, r):
    ax, ay = p
    bx, by = q
    cx, cy = r
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return (ux, uy)


def mirror(p, a, b):
    """Reflect p across the line through a and b."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy)
    fx, fy = a[0] + t * dx, a[1] + t * dy
    return (2 * fx - p[0], 2 * fy - p[1])


def chain(k, rk, l, rl, ts, q0):
    ps = [param_point(k[0], k[1], rk, t) for t in ts]
    qs = [param_point(l[0], l[1], rl, q0)]
    centres = []
    for i in range(len(ts) - 1):
        o = circumcenter(ps[i], qs[i], ps[i + 1])
        centres.append(o)
        qs.append(mirror(qs[i], o, l))
    centres.append(circumcenter(ps[-1], qs[-1], qs[0]))
    return ps, qs, centres


def det4(rows):
    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]])
                   for j in range(len(m)))
    return det([[x, y, x * x + y * y, F(1)] for x, y in rows])


def d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def normalized_concyclic(a, b, c, d):
    den = d2(a, b) * d2(c, d) + d2(a, c) * d2(b, d) + d2(a, d) * d2(b, c)
    return det4([a, b, c, d]) / den


def show(name, pts):
    print(name, ["(%s, %s)" % (x, y) for x, y in pts])


def config_residual(path):
    """Closing residual of a circle-circle configuration document."""
    with open(path) as fh:
        doc = json.load(fh)
    k, l = doc["carrierK"], doc["carrierL"]
    ps, qs, _ = chain((F(k["cx"]), F(k["cy"])), F(k["r"]), (F(l["cx"]), F(l["cy"])), F(l["r"]),
                      [F(t) for t in doc["pParams"]], F(doc["qStart"]))
    return normalized_concyclic(ps[-1], qs[-1], qs[0], ps[0])


if __name__ == "__main__" and len(sys.argv) > 1:
    for path in sys.argv[1:]:
        print(path, "closing residual:", config_residual(path))
    sys.exit(0)

if __name__ == "__main__":
    K, L = (F(0), F(0)), (F(4), F(0))
    ps, qs, os_ = chain(K, F(1), L, F(2), [F(0), F(1), F(-1), F(1, 3)], F(0))
    show("P", ps)
    show("Q", qs)
    show("O", os_)
    print("closing residual n=4:", normalized_concyclic(ps[-1], qs[-1], qs[0], ps[0]))
    refl = [mirror(K, os_[i], os_[(i + 1) % 4]) for i in range(4)]
    show("reflected K", refl)
    print("squared distances to L:", [str(d2(L, t)) for t in refl])

    # Brianchon control hexagon: determinant of the three main diagonals.
    h = [(F(0), F(0)), (F(4), F(0)), (F(5), F(2)), (F(3), F(5)), (F(1), F(4)), (F(-1), F(2))]

    def line(p, q):
        a = q[1] - p[1]
        b = p[0] - q[0]
        return (a, b, -(a * p[0] + b * p[1]))
    rows = [line(h[i], h[i + 3]) for i in range(3)]
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    det3 = a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    print("control hexagon diagonal determinant:", det3)
