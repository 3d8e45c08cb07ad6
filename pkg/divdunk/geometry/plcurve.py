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

from divdunk.geometry.predicates import toPoint, sub, add, scale, det, dot, sign, intersectSegments, CROSS, TOUCH, OVERLAP  # @UnresolvedImport
from divdunk.utils.SegmentIndex import candidatePairs  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport


class PLCurve:
    """Oriented polyline with exact rational vertices.

    Closed curves list every vertex once; the closing segment runs from the
    last vertex back to the first. Positions along the curve are given by
    parameters "segment index + fraction", not by arclength.
    """

    CLOSED = "closed"
    OPEN = "open"

    def __init__(self, points, closed=False):
        points = [toPoint(p) for p in points]
        if closed and len(points) > 1 and points[0] == points[-1]:
            points = points[:-1]
        self.points = tuple(points)
        self.closed = closed

    @property
    def kind(self):
        return self.CLOSED if self.closed else self.OPEN

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, PLCurve) and self.closed == other.closed and self.points == other.points

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.points, self.closed))

    def __repr__(self):
        return "PLCurve(" + self.kind + ", " + str(len(self.points)) + " points)"

    def segmentCount(self):
        if self.closed:
            return len(self.points)
        return len(self.points) - 1

    def segment(self, i):
        n = len(self.points)
        return self.points[i % n], self.points[(i + 1) % n]

    def segments(self):
        return [self.segment(i) for i in range(self.segmentCount())]

    def direction(self, i):
        a, b = self.segment(i)
        return sub(b, a)

    def length(self):
        # Parameter length of the curve
        return self.segmentCount()

    def pointAt(self, param):
        param = Fraction(param)
        i = int(param // 1)
        if not self.closed and i == self.segmentCount():
            return self.points[-1]
        i = i % self.segmentCount()
        a, b = self.segment(i)
        return add(a, scale(sub(b, a), param - (param // 1)))

    def reversed(self):
        if self.closed:
            points = [self.points[0]] + list(reversed(self.points[1:]))
            return PLCurve(points, closed=True)
        return PLCurve(list(reversed(self.points)), closed=False)

    def subpath(self, s, t):
        """Points of the curve from parameter s to parameter t.

        For closed curves t may exceed the length to wrap around.
        """
        s = Fraction(s)
        t = Fraction(t)
        points = [self.pointAt(s)]
        k = int(s // 1) + 1
        while k < t:
            points.append(self.points[k % len(self.points)] if self.closed else self.points[k])
            k += 1
        end = self.pointAt(t)
        if end != points[-1]:
            points.append(end)
        return points


class DoublePoint:

    def __init__(self, id, position, visits, frame, segments):
        self.id = id
        self.position = position
        self.visits = visits
        self.frame = frame
        self.segments = segments

    def __repr__(self):
        return "DoublePoint(" + str(self.id) + ", " + str(self.position) + ", " + str(self.visits) + ", " + str(self.frame) + ")"


class Violation:

    DEGENERATE = "degenerate segment"
    OFF_BOUNDARY = "endpoint off boundary"
    OUTSIDE = "vertex not inside disc"
    TOUCHING = "vertex on segment"
    OVERLAPPING = "overlapping segments"
    TRIPLE = "triple point"
    TOO_SHORT = "too few points"

    def __init__(self, kind, segments=(), position=None):
        self.kind = kind
        self.segments = segments
        self.position = position

    def __repr__(self):
        text = self.kind
        if self.segments:
            text += " at segments " + ",".join(str(s) for s in self.segments)
        if self.position is not None:
            text += " near (" + str(self.position[0]) + ", " + str(self.position[1]) + ")"
        return text


class GenericityReport:

    def __init__(self, curve, doublePoints, violations):
        self.curve = curve
        self.doublePoints = doublePoints
        self.violations = violations

    @property
    def valid(self):
        return len(self.violations) == 0

    def __repr__(self):
        if self.valid:
            return "valid, " + str(len(self.doublePoints)) + " double points"
        return "invalid: " + "; ".join(repr(v) for v in self.violations)

    def raiseIfInvalid(self):
        if not self.valid:
            raise GeometryError("Curve is not generic: " + "; ".join(repr(v) for v in self.violations))


def _adjacent(curve, i, j):
    n = curve.segmentCount()
    if j == i + 1:
        return True
    return curve.closed and i == 0 and j == n - 1


def validate(curve):
    violations = []
    points = curve.points

    minimum = 3 if curve.closed else 2
    if len(points) < minimum:
        return GenericityReport(curve, [], [Violation(Violation.TOO_SHORT)])

    segments = curve.segments()
    for i, (a, b) in enumerate(segments):
        if a == b:
            violations.append(Violation(Violation.DEGENERATE, (i,), a))
    if violations:
        return GenericityReport(curve, [], violations)

    if not curve.closed:
        for k, p in enumerate(points):
            r = p[0] * p[0] + p[1] * p[1]
            if k == 0 or k == len(points) - 1:
                if r != 1:
                    violations.append(Violation(Violation.OFF_BOUNDARY, (), p))
            elif r >= 1:
                violations.append(Violation(Violation.OUTSIDE, (), p))

    crossings = []
    for i, j in candidatePairs(segments):
        p1, p2 = segments[i]
        q1, q2 = segments[j]
        if _adjacent(curve, i, j):
            # Shared vertex; only a fold back onto the previous segment is bad
            if j == i + 1:
                a, b, c = p1, p2, q2
            else:
                a, b, c = q1, q2, p2
            if det(sub(a, b), sub(c, b)) == 0 and dot(sub(a, b), sub(c, b)) > 0:
                violations.append(Violation(Violation.OVERLAPPING, (i, j), b))
            continue
        hit = intersectSegments(p1, p2, q1, q2)
        if hit is None:
            continue
        if hit.kind == CROSS:
            crossings.append((i, j, hit))
        elif hit.kind == TOUCH:
            violations.append(Violation(Violation.TOUCHING, (i, j), hit.point))
        else:
            violations.append(Violation(Violation.OVERLAPPING, (i, j), p1))

    seen = {}
    for i, j, hit in crossings:
        if hit.point in seen:
            violations.append(Violation(Violation.TRIPLE, (i, j) + seen[hit.point], hit.point))
        seen[hit.point] = (i, j)

    doublePoints = []
    for i, j, hit in sorted(crossings, key=lambda c: c[0] + c[2].t):
        d1 = curve.direction(i)
        d2 = curve.direction(j)
        doublePoints.append(DoublePoint(len(doublePoints), hit.point, (i + hit.t, j + hit.u), sign(det(d1, d2)), (i, j)))

    return GenericityReport(curve, doublePoints, violations)


def gaussWord(report):
    """Double point ids in the order the curve visits them, with frames."""
    visits = []
    for v in report.doublePoints:
        visits.append((v.visits[0], v.id))
        visits.append((v.visits[1], v.id))
    visits.sort()
    return [vid for (_, vid) in visits], [v.frame for v in report.doublePoints]


def gaussCode(report):
    word, frames = gaussWord(report)
    text = " ".join(str(v + 1) for v in word)
    signs = " ".join(str(k + 1) + ("+" if f > 0 else "-") for k, f in enumerate(frames))
    return (text + " ; " + signs).strip()
