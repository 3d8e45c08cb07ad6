# Copyright (c) 2026 The Divdunk developers.
#
# This file is part of Divdunk.
#
# Divdunk is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# Divdunk is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from fractions import Fraction

#########################################################################
# Exact vector helpers on pairs of Fractions
#########################################################################


def toPoint(p):
    return (Fraction(p[0]), Fraction(p[1]))


def add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def scale(p, s):
    return (p[0] * s, p[1] * s)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def orient(o, a, b):
    return det(sub(a, o), sub(b, o))


def sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def normInf(u):
    return max(abs(u[0]), abs(u[1]))


def squareDirection(u):
    # Rescales u onto the boundary of the unit square
    n = normInf(u)
    return (u[0] / n, u[1] / n)


def rotateRight(u):
    return (u[1], -u[0])


def rotateLeft(u):
    return (-u[1], u[0])


def neg(u):
    return (-u[0], -u[1])


def pseudoAngle(u):
    """Diamond angle of a nonzero vector in [0, 4), east = 0, counterclockwise.

    Monotone in the true angle, so comparisons are exact.
    """
    x, y = u
    if y >= 0:
        if x >= 0:
            return Fraction(y) / (x + y)
        return 1 - Fraction(x) / (-x + y)
    if x < 0:
        return 2 - Fraction(y) / (-x - y)
    return 3 + Fraction(x) / (x - y)


def angleFromDown(u):
    # Diamond angle measured counterclockwise from the downward direction
    return (pseudoAngle(u) - 3) % 4


def onSegment(p, a, b):
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


#########################################################################
# Segment intersection
#########################################################################

CROSS = "cross"
TOUCH = "touch"
OVERLAP = "overlap"


class Intersection:
    """Result of intersecting two closed segments.

    kind is CROSS for a proper transversal crossing of the open segments,
    TOUCH when an endpoint lies on the other segment, OVERLAP for collinear
    segments sharing more than a point. t and u are the parameters of point
    on the first and second segment.
    """

    def __init__(self, kind, point=None, t=None, u=None):
        self.kind = kind
        self.point = point
        self.t = t
        self.u = u

    def __repr__(self):
        return self.kind + "@" + str(self.point)


def intersectSegments(p1, p2, q1, q2):
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)

    if d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        if (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0):
            t = d1 / (d1 - d2)
            u = d3 / (d3 - d4)
            point = add(p1, scale(sub(p2, p1), t))
            return Intersection(CROSS, point, t, u)
        return None

    if d1 == 0 and d2 == 0:
        # Collinear supports
        if _collinearOverlap(p1, p2, q1, q2):
            return Intersection(OVERLAP)
        for p in (p1, p2):
            if onSegment(p, q1, q2):
                return Intersection(TOUCH, p)
        for q in (q1, q2):
            if onSegment(q, p1, p2):
                return Intersection(TOUCH, q)
        return None

    for p in (p1, p2):
        if onSegment(p, q1, q2):
            return Intersection(TOUCH, p)
    for q in (q1, q2):
        if onSegment(q, p1, p2):
            return Intersection(TOUCH, q)
    return None


def _collinearOverlap(p1, p2, q1, q2):
    # Project on the dominant axis of p
    axis = 0 if abs(p2[0] - p1[0]) >= abs(p2[1] - p1[1]) else 1
    lo1, hi1 = sorted((p1[axis], p2[axis]))
    lo2, hi2 = sorted((q1[axis], q2[axis]))
    return min(hi1, hi2) > max(lo1, lo2)


def shoelace(points):
    # Twice the signed area of a closed polygon
    total = Fraction(0)
    n = len(points)
    for k in range(n):
        total += det(points[k], points[(k + 1) % n])
    return total
