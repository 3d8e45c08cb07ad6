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

#########################################################################
# Doubling a divide in diagonal position into one closed strand
#########################################################################

import math
from fractions import Fraction

from divdunk.geometry.predicates import add, sub, scale, normInf, squareDirection, rotateRight, rotateLeft, neg, det, pseudoAngle, angleFromDown  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

PLUS = 1
MINUS = -1

EDGE = "edge"
SWEEP = "sweep"
CAP = "cap"
JUMP = "jump"
OUT_LEG = "out"
RETURN_LEG = "return"
CONNECTOR = "connector"

# Legs of a jump run above or below everything else
TOP = Fraction(-1)
BOTTOM = Fraction(5)

CORNERS = [(Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1)), (Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1))]
DOWN = (Fraction(0), Fraction(-1))

MAX_CUT = Fraction(1, 8)


class StrandPiece:
    """One straight piece of the doubled divide.

    Points of an edge piece carry the tangent direction u of their copy;
    points of a sweep or cap around centre c are c + eps * rotateRight(q)
    for a direction q on the unit square. The height of a point is the
    angle of its direction measured from straight down; lower is over.
    """

    def __init__(self, start, end, kind, side, source, direction=None, centre=None, eps=None, ccw=None, level=None):
        self.start = start
        self.end = end
        self.kind = kind
        self.side = side
        self.source = source
        self.direction = direction
        self.centre = centre
        self.eps = eps
        self.ccw = ccw
        self.level = level

    def __repr__(self):
        return self.kind + ("+" if self.side == PLUS else "-") + str(self.source) + ":" + str(self.start) + "->" + str(self.end)

    def height(self, point):
        if self.kind == EDGE:
            return angleFromDown(self.direction)
        if self.kind in (SWEEP, CAP, JUMP):
            return angleFromDown(rotateLeft(scale(sub(point, self.centre), 1 / self.eps)))
        return self.level


class DoubledDivide:
    """Closed offset strand of a divide: the copy keeping right of the
    forward direction, an end cap, the copy keeping right of the backward
    direction and a start cap. Each piece records its divide segment or
    vertex and its side."""

    def __init__(self, divide, pieces, eps, cut):
        self.divide = divide
        self.pieces = pieces
        self.eps = eps
        self.cut = cut

    def __len__(self):
        return len(self.pieces)

    def jumps(self):
        return [k for k, p in enumerate(self.pieces) if p.kind == JUMP]


def featureDistance(curve):
    """Smallest distance from a vertex to a segment not incident to it, or
    between the ends of a segment, in floating point."""
    points = [(float(x), float(y)) for (x, y) in curve.points]
    n = curve.segmentCount()
    best = math.inf
    for i in range(n):
        a, b = points[i], points[(i + 1) % len(points)]
        best = min(best, math.hypot(b[0] - a[0], b[1] - a[1]))
        for k, p in enumerate(points):
            if k == i or k == (i + 1) % len(points):
                continue
            best = min(best, _pointSegmentDistance(p, a, b))
    return best


def _pointSegmentDistance(p, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy)
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy)


def defaultOffset(curve):
    # Largest power of 1/2 below an eighth of the feature distance
    target = featureDistance(curve) / 8
    eps = Fraction(1)
    while eps > target:
        eps /= 2
    return eps


def defaultCut(curve):
    """Half-width of the jump window around straight down on the unit square,
    narrower than any segment direction lying on the top or bottom side."""
    cut = MAX_CUT
    for i in range(curve.segmentCount()):
        q = squareDirection(curve.direction(i))
        if abs(q[1]) == 1:
            cut = min(cut, abs(q[0]) / 2)
    return cut


def _squarePath(qa, qb, ccw, cut):
    """Directions visited turning from qa to qb along the unit square.

    Returns (directions, jumpIndex) where jumpIndex is the index of the step
    crossing straight down between the two cut directions, or None.
    """
    psiA = pseudoAngle(qa)
    if ccw:
        offset = lambda q: (pseudoAngle(q) - psiA) % 4
    else:
        offset = lambda q: (psiA - pseudoAngle(q)) % 4
    span = offset(qb)
    stops = [(offset(c), c) for c in CORNERS if 0 < offset(c) < span]
    jumpAt = None
    if 0 < offset(DOWN) < span:
        cuts = [(-cut, Fraction(-1)), (cut, Fraction(-1))]
        if not ccw:
            cuts.reverse()
        stops.extend((offset(c), c) for c in cuts)
    stops.sort()
    path = [qa] + [c for (_, c) in stops] + [qb]
    if 0 < offset(DOWN) < span:
        for k in range(len(path) - 1):
            if path[k][1] == -1 and path[k + 1][1] == -1 and abs(path[k][0]) == cut and path[k][0] == -path[k + 1][0]:
                jumpAt = k
    return path, jumpAt


def _turn(pieces, centre, qa, qb, ccw, eps, cut, kind, side, source):
    path, jumpAt = _squarePath(qa, qb, ccw, cut)
    points = [add(centre, scale(rotateRight(q), eps)) for q in path]
    for k in range(len(points) - 1):
        if points[k] == points[k + 1]:
            continue
        pieceKind = JUMP if k == jumpAt else kind
        pieces.append(StrandPiece(points[k], points[k + 1], pieceKind, side, source, centre=centre, eps=eps, ccw=ccw))


def double(diagonal, eps=None, cut=None):
    """Doubles a divide in diagonal position at offset eps."""
    curve = diagonal.curve
    if curve.closed:
        raise GeometryError("only divides can be doubled")
    if eps is None:
        eps = defaultOffset(curve)
    if cut is None:
        cut = defaultCut(curve)
    n = curve.segmentCount()
    P = curve.points
    v = [squareDirection(curve.direction(k)) for k in range(n)]
    pieces = []

    def edge(k, side):
        u = v[k] if side == PLUS else neg(v[k])
        shift = scale(rotateRight(u), eps)
        a, b = (P[k], P[k + 1]) if side == PLUS else (P[k + 1], P[k])
        pieces.append(StrandPiece(add(a, shift), add(b, shift), EDGE, side, k, direction=u))

    def sweep(k, ua, ub, side):
        if ua == ub:
            return
        _turn(pieces, P[k], ua, ub, det(ua, ub) > 0, eps, cut, SWEEP, side, k)

    for k in range(n):
        if k > 0:
            sweep(k, v[k - 1], v[k], PLUS)
        edge(k, PLUS)
    last = v[n - 1]
    _turn(pieces, P[n], last, neg(last), angleFromDown(last) < 2, eps, cut, CAP, PLUS, n)
    for k in range(n - 1, -1, -1):
        if k < n - 1:
            sweep(k + 1, neg(v[k + 1]), neg(v[k]), MINUS)
        edge(k, MINUS)
    first = neg(v[0])
    _turn(pieces, P[0], first, neg(first), angleFromDown(first) < 2, eps, cut, CAP, MINUS, 0)

    for p, q in zip(pieces, pieces[1:] + pieces[:1]):
        if p.end != q.start:
            raise GeometryError("doubled strand is not closed at " + str(p.end))
    return DoubledDivide(diagonal, pieces, eps, cut)


def routeJumps(doubled, origin):
    """Replaces every jump piece by two parallel legs through the far plane.

    A sweep turning clockwise through straight down leaves above everything
    and returns below; counterclockwise the other way round.
    """
    pieces = []
    for p in doubled.pieces:
        if p.kind != JUMP:
            pieces.append(p)
            continue
        d = sub(p.centre, origin)
        if d == (0, 0):
            raise GeometryError("jump centre coincides with the routing origin")
        far = scale(d, 4 / normInf(d))
        outLevel, returnLevel = (BOTTOM, TOP) if p.ccw else (TOP, BOTTOM)
        a = add(p.start, far)
        b = add(p.end, far)
        pieces.append(StrandPiece(p.start, a, OUT_LEG, p.side, p.source, level=outLevel))
        pieces.append(StrandPiece(a, b, CONNECTOR, p.side, p.source))
        pieces.append(StrandPiece(b, p.end, RETURN_LEG, p.side, p.source, level=returnLevel))
    return pieces
