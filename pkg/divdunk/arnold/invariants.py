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

from divdunk.arnold.smoothing import smoothAll, regionProfile  # @UnresolvedImport
from divdunk.geometry.diagonal import DiagonalPosition, Extremum  # @UnresolvedImport
from divdunk.geometry.plcurve import validate  # @UnresolvedImport
from divdunk.geometry.predicates import det, sign  # @UnresolvedImport
from divdunk.geometry.winding import indexAt, pointIndex  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, OracleError  # @UnresolvedImport


def _integer(value, what):
    if Fraction(value).denominator != 1:
        raise OracleError(what + " is not an integer: " + str(value))
    return int(value)


def jTilde(curve):
    """Sum of ind^2 * chi over the regions of the smoothed curve."""
    profile = regionProfile(smoothAll(curve))
    return sum(r.index * r.index * r.euler for r in profile.bounded)


def jMinus(curve):
    return 1 - jTilde(curve)


def jPlus(curve):
    report = validate(curve)
    return jMinus(curve) + len(report.doublePoints)


class EdgeWord:
    """Edges of a closed curve numbered 1..2n from a base point.

    pairs maps a double point id to its incoming edge numbers (i, j), ordered
    so that the tangents of edge i and edge j form a positive frame.
    """

    def __init__(self, basepoint, edges, pairs):
        self.basepoint = basepoint
        self.edges = edges
        self.pairs = pairs

    def vertexSign(self, vid):
        i, j = self.pairs[vid]
        return sign(i - j)


def edgeWord(curve, report, basepoint):
    length = curve.segmentCount()
    f = Fraction(basepoint) % length
    visits = []
    for v in report.doublePoints:
        visits.append((v.visits[0], v.id, 0))
        visits.append((v.visits[1], v.id, 1))
    visits.sort()
    count = len(visits)
    if any(f == param for (param, _, _) in visits):
        raise GeometryError("basepoint lies on a double point")
    if count == 0:
        return EdgeWord(f, 0, {})

    # arc m runs from visit m to visit m + 1
    first = count - 1
    for m in range(count - 1):
        if visits[m][0] < f < visits[m + 1][0]:
            first = m
    number = lambda m: (m - first) % count + 1

    incoming = {}
    for k, (_, vid, b) in enumerate(visits):
        incoming[(vid, b)] = number((k - 1) % count)

    pairs = {}
    for v in report.doublePoints:
        i1 = incoming[(v.id, 0)]
        i2 = incoming[(v.id, 1)]
        t1 = curve.direction(v.segments[0])
        t2 = curve.direction(v.segments[1])
        pairs[v.id] = (i1, i2) if det(t1, t2) > 0 else (i2, i1)
    return EdgeWord(f, count, pairs)


def strangeness(curve, basepoint=0):
    if not curve.closed:
        raise GeometryError("strangeness is defined for closed curves only")
    report = validate(curve)
    report.raiseIfInvalid()
    word = edgeWord(curve, report, basepoint)

    total = Fraction(0)
    for v in report.doublePoints:
        total += indexAt(curve, v) * word.vertexSign(v.id)
    f = pointIndex(curve, word.basepoint)
    total += f * f - Fraction(1, 4)
    return _integer(total, "strangeness")


def jTildeMinmax(diagonal):
    """J~ from double point directions and x-extrema of a diagonal position."""
    if not isinstance(diagonal, DiagonalPosition):
        raise GeometryError("curve is not in diagonal position")
    curve = diagonal.curve
    if not curve.closed:
        raise GeometryError("minmax formula needs a closed curve")

    total = Fraction(0)
    for v in diagonal.report.doublePoints:
        dy = [curve.direction(i)[1] for i in v.segments]
        if dy[0] > 0 and dy[1] > 0:
            total += 1
        elif dy[0] < 0 and dy[1] < 0:
            total += 1

    for e in diagonal.extrema:
        ind = pointIndex(curve, e.vertex)
        if (e.kind, e.strand) in ((Extremum.MIN, Extremum.DOWN), (Extremum.MAX, Extremum.UP)):
            total += ind
        else:
            total -= ind
    return _integer(total, "minmax J~")
