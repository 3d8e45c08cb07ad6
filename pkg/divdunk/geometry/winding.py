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
from divdunk.geometry.predicates import add, sub, scale, det, orient, onSegment, neg, pseudoAngle, squareDirection, rotateLeft, intersectSegments  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

# Halvings of the sampling radius before giving up
MAX_REFINEMENT = 64


def _closedCurves(curveOrFamily):
    if isinstance(curveOrFamily, PLCurve):
        curves = [curveOrFamily]
    elif hasattr(curveOrFamily, "circles"):
        curves = curveOrFamily.circles
    else:
        curves = list(curveOrFamily)
    for curve in curves:
        if not curve.closed:
            raise GeometryError("winding number defined for closed curves only")
    return curves


def windingNumber(curveOrFamily, point):
    """Signed winding number of closed curve(s) around point.

    Counts upward and downward crossings of the horizontal ray to the right
    with the half-open rule, so vertices on the ray are counted once.
    """
    wn = 0
    for curve in _closedCurves(curveOrFamily):
        for a, b in curve.segments():
            if onSegment(point, a, b):
                raise GeometryError("point lies on the curve")
            if a[1] <= point[1]:
                if b[1] > point[1] and orient(a, b, point) > 0:
                    wn += 1
            elif b[1] <= point[1] and orient(a, b, point) < 0:
                wn -= 1
    return wn


def turningNumber(curve):
    if not curve.closed:
        raise GeometryError("turning number defined for closed curves only")

    total = 0
    n = curve.segmentCount()
    for k in range(n):
        din = curve.direction(k - 1)
        dout = curve.direction(k)
        turn = det(din, dout)
        a = pseudoAngle(din)
        b = pseudoAngle(dout)
        # Count passes of the tangent through the east direction
        if turn > 0 and b < a:
            total += 1
        elif turn < 0 and a < b:
            total -= 1
    return total


def _clear(curve, p, samples, incident):
    segments = curve.segments()
    for q in samples:
        for k, (a, b) in enumerate(segments):
            if k in incident:
                continue
            if intersectSegments(p, q, a, b) is not None:
                return False
    return True


def _average(curves, samples):
    return Fraction(sum(windingNumber(curves, q) for q in samples), len(samples))


def _sampleAround(curve, p, directions, incident):
    eta = Fraction(1, 4)
    for _ in range(MAX_REFINEMENT):
        samples = [add(p, scale(d, eta)) for d in directions]
        if _clear(curve, p, samples, incident):
            return samples
        eta /= 2
    raise GeometryError("sampling radius refinement failed near " + str(p))


def pointIndex(curve, param):
    """Index of a point on a closed curve: mean winding number on both sides.

    Half-integer by construction. param must not be a double point visit.
    """
    if not curve.closed:
        raise GeometryError("index defined for closed curves only")
    param = Fraction(param) % curve.segmentCount()
    p = curve.pointAt(param)
    n = curve.segmentCount()
    k = int(param // 1)

    if param == k:
        w = add(neg(squareDirection(curve.direction(k - 1))), squareDirection(curve.direction(k)))
        incident = set([(k - 1) % n, k])
        if w == (0, 0):
            w = rotateLeft(squareDirection(curve.direction(k)))
    else:
        w = rotateLeft(squareDirection(curve.direction(k)))
        incident = set([k])

    samples = _sampleAround(curve, p, [w, neg(w)], incident)
    return _average(curve, samples)


def vertexIndex(curve, v):
    """Quarter-sum of the winding numbers of the four quadrants at a double point."""
    if not curve.closed:
        raise GeometryError("index defined for closed curves only")
    known = [u for u in validate(curve).doublePoints if u.position == v.position]
    if not known:
        raise GeometryError("not a double point of the curve: " + str(v.position))
    return indexAt(curve, known[0])


def indexAt(curve, v):
    # vertexIndex for a double point already taken from validate(curve)
    d1 = squareDirection(curve.direction(v.segments[0]))
    d2 = squareDirection(curve.direction(v.segments[1]))
    directions = [add(d1, d2), sub(d1, d2), sub(neg(d1), d2), sub(d2, d1)]
    samples = _sampleAround(curve, v.position, directions, set(v.segments))
    return _average(curve, samples)
