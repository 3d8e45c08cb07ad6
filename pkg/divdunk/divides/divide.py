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

from divdunk.geometry.plcurve import PLCurve, validate  # @UnresolvedImport
from divdunk.geometry.predicates import scale, normInf, pseudoAngle, intersectSegments, CROSS  # @UnresolvedImport
from divdunk.utils.SegmentIndex import crossPairs  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

# Half-size of the square the closure arc runs along, outside the unit disc
CLOSURE_BOX = 3


class Divide:
    """An I-divide: one generic open polyline with endpoints on the unit circle."""

    def __init__(self, curve, name=None):
        if curve.closed:
            raise GeometryError("a divide must be an open curve")
        report = validate(curve)
        report.raiseIfInvalid()
        self.curve = curve
        self.report = report
        self.name = name

    @classmethod
    def fromPoints(cls, points, name=None):
        return cls(PLCurve(points, closed=False), name)

    @property
    def doublePoints(self):
        return self.report.doublePoints

    def reversed(self):
        return Divide(self.curve.reversed(), self.name)

    def __repr__(self):
        return "Divide(" + (self.name or "") + ", " + str(len(self.curve)) + " points, " + str(len(self.doublePoints)) + " double points)"


def closure(divide):
    """Closes the divide with the boundary arc it orients counterclockwise.

    The arc is pushed out of the disc: radially from the end point to a square
    of half-size CLOSURE_BOX, counterclockwise along it, and radially back in
    to the start point. It meets the divide only at the endpoints.
    """
    start = divide.curve.points[0]
    end = divide.curve.points[-1]
    a = scale(end, Fraction(CLOSURE_BOX) / normInf(end))
    b = scale(start, Fraction(CLOSURE_BOX) / normInf(start))
    psiA = pseudoAngle(a)
    span = (pseudoAngle(b) - psiA) % 4

    corners = []
    for corner in ((CLOSURE_BOX, CLOSURE_BOX), (-CLOSURE_BOX, CLOSURE_BOX), (-CLOSURE_BOX, -CLOSURE_BOX), (CLOSURE_BOX, -CLOSURE_BOX)):
        offset = (pseudoAngle(corner) - psiA) % 4
        if 0 < offset < span:
            corners.append((offset, corner))
    corners.sort()

    points = list(divide.curve.points) + [a] + [c for (_, c) in corners] + [b]
    curve = PLCurve(points, closed=True)
    report = validate(curve)
    if not report.valid or len(report.doublePoints) != len(divide.doublePoints):
        raise GeometryError("closure arc collides with the divide")
    return curve


class SmoothingAtVertex:

    def __init__(self, oPart, iPart, vertex, crossings):
        self.oPart = oPart
        self.iPart = iPart
        self.vertex = vertex
        self.crossings = crossings

    def __repr__(self):
        return "SmoothingAtVertex(" + str(self.vertex.id) + ", crossings " + str(self.crossings) + ")"


def _findVertex(divide, v):
    for u in divide.doublePoints:
        if u.position == v.position:
            return u
    raise GeometryError("not a double point of the divide: " + str(v.position))


def smoothAt(divide, v):
    """Splits the divide at v into the closed piece O_v and the open piece I_v."""
    v = _findVertex(divide, v)
    curve = divide.curve
    s1, s2 = v.visits
    X = v.position

    oPart = PLCurve(curve.subpath(s1, s2), closed=True)
    iPart = PLCurve(curve.subpath(0, s1) + curve.subpath(s2, curve.segmentCount())[1:], closed=False)

    crossings = 0
    so = oPart.segments()
    si = iPart.segments()
    for i, j in crossPairs(so, si):
        hit = intersectSegments(so[i][0], so[i][1], si[j][0], si[j][1])
        if hit is None:
            continue
        if hit.kind == CROSS:
            crossings += 1
        elif hit.point != X:
            raise GeometryError("pieces of the smoothing touch at " + str(hit.point))
    return SmoothingAtVertex(oPart, iPart, v, crossings)


class ChordDiagram:
    """Double points as chords on [0, 1], in first-visit order."""

    def __init__(self, chords):
        self.chords = chords

    def __len__(self):
        return len(self.chords)

    def intersects(self, k, l):
        a, b = self.chords[k]
        c, d = self.chords[l]
        return a < c < b < d or c < a < d < b

    def interleaving(self, k):
        return sum(1 for l in range(len(self.chords)) if l != k and self.intersects(k, l))

    def intersectionCount(self):
        n = len(self.chords)
        return sum(1 for k in range(n) for l in range(k + 1, n) if self.intersects(k, l))


def chordDiagram(divide):
    length = divide.curve.segmentCount()
    return ChordDiagram([(v.visits[0] / length, v.visits[1] / length) for v in divide.doublePoints])
