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

from divdunk.geometry.plcurve import PLCurve, validate, gaussCode  # @UnresolvedImport
from divdunk.geometry.predicates import add, sub, scale, dot, det, sign, normInf, squareDirection  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, debug  # @UnresolvedImport

DIAGONALS = [(1, 1), (-1, 1), (-1, -1), (1, -1)]

MAX_ROTATIONS = 256
MAX_SHRINK = 40
RATIOS = [Fraction(1, 2), Fraction(1, 3), Fraction(3, 5)]


class Extremum:

    MIN = "min"
    MAX = "max"
    UP = "up"
    DOWN = "down"

    def __init__(self, vertex, position, kind, strand):
        self.vertex = vertex
        self.position = position
        self.kind = kind
        self.strand = strand

    def __repr__(self):
        return self.kind + "/" + self.strand + "@" + str(self.vertex)


class DiagonalPosition:
    """A weak diagonal realization of a generic curve.

    Only the two branches through each double point are made to run at
    slope +1 and -1. Every other segment keeps whatever slope the rotation
    gave it, so it is generally not diagonal; none is vertical or
    horizontal, and x-extrema are isolated vertices.
    """

    def __init__(self, curve, extrema, report, rotation=None):
        self.curve = curve
        self.extrema = extrema
        self.report = report
        self.rotation = rotation

    def __repr__(self):
        return "DiagonalPosition(" + repr(self.curve) + ", " + str(len(self.extrema)) + " extrema)"


def rationalRotation(t):
    # Rotation by the angle whose half-tangent is t; keeps the unit circle
    t = Fraction(t)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    return c, s


def rotateCurve(curve, t):
    c, s = rationalRotation(t)
    return PLCurve([(c * x - s * y, s * x + c * y) for (x, y) in curve.points], closed=curve.closed)


def _hasAxisParallel(curve):
    return any(d[0] == 0 or d[1] == 0 for d in (curve.direction(i) for i in range(curve.segmentCount())))


def _removeAxisParallel(curve):
    if not _hasAxisParallel(curve):
        return curve, None
    for k in range(MAX_ROTATIONS):
        t = Fraction(1, 64 + k)
        rotated = rotateCurve(curve, t)
        if not _hasAxisParallel(rotated):
            return rotated, t
    raise GeometryError("no rotation removes axis-parallel segments")


def _diagonalFrame(d1, d2):
    """Perpendicular diagonals e1, e2 with e1.d1 > 0, e2.d2 > 0 and the same
    orientation as (d1, d2)."""
    orientation = sign(det(d1, d2))
    for e1 in DIAGONALS:
        if dot(e1, d1) <= 0:
            continue
        for e2 in DIAGONALS:
            if dot(e1, e2) == 0 and dot(e2, d2) > 0 and sign(det(e1, e2)) == orientation:
                return e1, e2
    raise GeometryError("no diagonal frame for branches " + str(d1) + ", " + str(d2))


def _isDiagonal(d):
    return abs(d[0]) == abs(d[1])


def _room(curve, report):
    # Free length on each side of every branch, in units of the max norm
    perSegment = {}
    for v in report.doublePoints:
        for b in (0, 1):
            i = v.segments[b]
            perSegment.setdefault(i, []).append(v.visits[b] - i)
    room = {}
    for v in report.doublePoints:
        lam = None
        for b in (0, 1):
            i = v.segments[b]
            f = v.visits[b] - i
            length = normInf(curve.direction(i))
            gaps = [f, 1 - f] + [abs(f - g) for g in perSegment[i] if g != f]
            local = min(gaps) * length / 3
            lam = local if lam is None else min(lam, local)
        room[v.id] = lam
    return room


def _replaceCrossings(curve, report, shrink, ratio):
    room = _room(curve, report)
    inserts = {}
    for v in report.doublePoints:
        d1 = squareDirection(curve.direction(v.segments[0]))
        d2 = squareDirection(curve.direction(v.segments[1]))
        e1, e2 = _diagonalFrame(d1, d2)
        lam = room[v.id] * shrink
        mu = lam * ratio
        X = v.position
        for b, d, e in ((0, d1, e1), (1, d2, e2)):
            i = v.segments[b]
            f = v.visits[b] - i
            points = [sub(X, scale(d, lam)), sub(X, scale(e, mu)), add(X, scale(e, mu)), add(X, scale(d, lam))]
            inserts.setdefault(i, []).append((f, points))

    points = []
    for k in range(curve.segmentCount()):
        points.append(curve.points[k])
        for f, extra in sorted(inserts.get(k, []), key=lambda item: item[0]):
            points.extend(extra)
    if not curve.closed:
        points.append(curve.points[-1])
    return PLCurve(points, closed=curve.closed)


def findExtrema(curve):
    extrema = []
    n = len(curve.points)
    vertices = range(n) if curve.closed else range(1, n - 1)
    for k in vertices:
        din = curve.direction(k - 1)
        dout = curve.direction(k)
        if sign(din[0]) == sign(dout[0]):
            continue
        kind = Extremum.MAX if din[0] > 0 else Extremum.MIN
        ccw = det(din, dout) > 0
        strand = Extremum.UP if ccw == (kind == Extremum.MAX) else Extremum.DOWN
        extrema.append(Extremum(k, curve.points[k], kind, strand))
    return extrema


def diagonalize(curve):
    report = validate(curve)
    report.raiseIfInvalid()
    code = gaussCode(report)

    rotated, t = _removeAxisParallel(curve)
    rotatedReport = validate(rotated)
    if not rotatedReport.valid or gaussCode(rotatedReport) != code:
        raise GeometryError("rotation changed the curve combinatorics")

    if not rotatedReport.doublePoints:
        return DiagonalPosition(rotated, findExtrema(rotated), rotatedReport, t)

    shrink = Fraction(1)
    for attempt in range(MAX_SHRINK):
        ratio = RATIOS[attempt % len(RATIOS)]
        candidate = _replaceCrossings(rotated, rotatedReport, shrink, ratio)
        candidateReport = validate(candidate)
        if candidateReport.valid and gaussCode(candidateReport) == code and not _hasAxisParallel(candidate):
            branches = [candidate.direction(i) for v in candidateReport.doublePoints for i in v.segments]
            if all(_isDiagonal(d) for d in branches):
                return DiagonalPosition(candidate, findExtrema(candidate), candidateReport, t)
        debug("diagonalize: attempt " + str(attempt) + " rejected, shrinking")
        if attempt % len(RATIOS) == len(RATIOS) - 1:
            shrink /= 2

    raise GeometryError("diagonalization failed after " + str(MAX_SHRINK) + " refinements")
