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
# Self-tangency and triple point perestroikas as local splices
#########################################################################

from fractions import Fraction

from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve, validate  # @UnresolvedImport
from divdunk.geometry.predicates import add, sub, scale, dot, det, orient  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

DIRECT = "direct-tangency"
INVERSE = "inverse-tangency"
TRIPLE = "triple-point"


class MoveSite:
    """Where and how to apply a perestroika.

    For tangency moves a finger grows from the point at fraction `at` of
    segment `branches[0]`, of half-width `width` (a fraction of that
    segment), towards the point at fraction `target` of segment
    `branches[1]` and overshoots it by `depth`. For triple moves segment
    `branches[2]` is pushed across the double point of `branches[0]` and
    `branches[1]`; `width` and `depth` size the new bend.
    """

    def __init__(self, kind, branches, at=Fraction(1, 2), target=Fraction(1, 2), width=Fraction(1, 8), depth=Fraction(1, 4)):
        self.kind = kind
        self.branches = tuple(branches)
        self.at = Fraction(at)
        self.target = Fraction(target)
        self.width = Fraction(width)
        self.depth = Fraction(depth)

    def __repr__(self):
        return "MoveSite(" + self.kind + ", " + str(self.branches) + ")"


class VanishingTriangle:
    """Three double points and, per side, the curve parameters of its two ends."""

    def __init__(self, vertices, sides):
        self.vertices = vertices
        # sides: (vertex, param, vertex, param) with vertex an index into vertices
        self.sides = sides


class MoveReceipt:

    def __init__(self, kind, before, after, created, destroyed, positive, site, triangleBefore=None, triangleAfter=None):
        self.kind = kind
        self.before = before
        self.after = after
        self.created = created
        self.destroyed = destroyed
        self.positive = positive
        self.site = site
        self.triangleBefore = triangleBefore
        self.triangleAfter = triangleAfter

    def __repr__(self):
        return "MoveReceipt(" + self.kind + ", " + ("positive" if self.positive else "negative") + ")"

    def inverted(self):
        """The same perestroika run backwards."""
        return MoveReceipt(self.kind, self.after, self.before, self.destroyed, self.created, not self.positive, self.site,
                           self.triangleAfter, self.triangleBefore)

    def moveLog(self):
        parts = [self.kind, "+" if self.positive else "-", "branches=" + ",".join(str(b) for b in self.site.branches),
                 "created=" + str(len(self.created)), "destroyed=" + str(len(self.destroyed))]
        if self.triangleBefore is not None:
            parts.append("triangles=" + str(self.triangleBefore) + "/" + str(self.triangleAfter))
        return " ".join(parts)


def shapeCurve(shape):
    return shape.curve if isinstance(shape, Divide) else shape


def _rewrap(shape, curve):
    if isinstance(shape, Divide):
        return Divide(curve, shape.name)
    return curve


def _insideDisc(points):
    return all(x * x + y * y < 1 for (x, y) in points)


def triangleSign(triangle):
    """(-1)^q with q the sides whose curve direction agrees with the
    orientation induced by the order the curve meets the sides."""
    sides = sorted(triangle.sides, key=lambda s: min(s[1], s[3]))
    q = 0
    for k, (u, pu, v, pv) in enumerate(sides):
        previous = sides[k - 1]
        following = sides[(k + 1) % 3]
        shared = ({previous[0], previous[2]} & {u, v}).pop()
        towards = ({following[0], following[2]} & {u, v}).pop()
        start, end = (u, v) if pu < pv else (v, u)
        if start == shared and end == towards:
            q += 1
    return -1 if q % 2 else 1


def _visitOn(v, segments):
    for visit, s in zip(v.visits, v.segments):
        if s in segments:
            return visit
    raise GeometryError("double point " + str(v.position) + " is not on segments " + str(sorted(segments)))


def _findPoint(report, position):
    for v in report.doublePoints:
        if v.position == position:
            return v
    raise GeometryError("no double point at " + str(position))


def _crossingOf(report, s, t):
    found = [v for v in report.doublePoints if set(v.segments) == {s, t}]
    if len(found) != 1:
        raise GeometryError("segments " + str(s) + " and " + str(t) + " cross " + str(len(found)) + " times")
    return found[0]


def _triangle(report, corners, sideSegments):
    """corners: three double points; sideSegments[k]: segments of the side
    joining corners[k] and corners[(k + 1) % 3]."""
    sides = []
    for k in range(3):
        segs = sideSegments[k]
        a, b = corners[k], corners[(k + 1) % 3]
        sides.append((k, _visitOn(a, segs), (k + 1) % 3, _visitOn(b, segs)))
    return VanishingTriangle(corners, sides)


def _finger(shape, site):
    curve = shapeCurve(shape)
    i, j = site.branches
    n = curve.segmentCount()
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise GeometryError("finger needs two distinct segments")
    a0, a1 = curve.segment(i)
    b0, b1 = curve.segment(j)
    di = sub(a1, a0)
    dj = sub(b1, b0)
    A = add(a0, scale(di, site.at))
    B = add(b0, scale(dj, site.target))
    normal = scale(sub(B, A), 1 + site.depth)
    # direct when branch i and branch j run the same way across the finger
    across, along = det(normal, di), det(normal, dj)
    if across == 0 or along == 0:
        raise GeometryError("finger runs parallel to a branch")
    w = scale(di, site.width)
    finger = [sub(A, w), add(sub(A, w), normal), add(add(A, w), normal), add(A, w)]
    if not curve.closed and not _insideDisc(finger):
        raise GeometryError("finger leaves the disc")

    points = list(curve.points[:i + 1]) + finger + list(curve.points[i + 1:])
    moved = PLCurve(points, closed=curve.closed)
    before = validate(curve)
    after = validate(moved)
    if not after.valid:
        raise GeometryError("finger move makes the curve non-generic: " + str(after.violations[0]))
    old = set(v.position for v in before.doublePoints)
    new = set(v.position for v in after.doublePoints)
    if not old <= new or len(new) != len(old) + 2:
        raise GeometryError("finger move must add exactly two double points and keep the others")
    created = [v for v in after.doublePoints if v.position not in old]
    jNew = j + 4 if j > i else j
    for v in created:
        if set(v.segments) not in ({i + 1, jNew}, {i + 3, jNew}):
            raise GeometryError("finger meets a branch other than the target")
    kind = DIRECT if (across > 0) == (along > 0) else INVERSE
    site = MoveSite(kind, site.branches, site.at, site.target, site.width, site.depth)
    return MoveReceipt(kind, shape, _rewrap(shape, moved), [v.position for v in created], [], True, site)


def _inTriangle(p, a, b, c):
    o1, o2, o3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)


def _triple(shape, site):
    curve = shapeCurve(shape)
    i, j, k = site.branches
    before = validate(curve)
    pij = _crossingOf(before, i, j)
    pki = _crossingOf(before, k, i)
    pkj = _crossingOf(before, k, j)
    # along k, the crossing with i comes first
    if _visitOn(pki, {k}) > _visitOn(pkj, {k}):
        i, j = j, i
        pki, pkj = pkj, pki
    onK = sorted(_visitOn(v, {k}) for v in before.doublePoints if k in v.segments)
    low, high = _visitOn(pki, {k}), _visitOn(pkj, {k})
    if any(low < s < high for s in onK):
        raise GeometryError("side of the triangle on segment " + str(k) + " is crossed")

    X, Y, Z = pij.position, pki.position, pkj.position
    tk = sub(Z, Y)
    U = sub(Y, scale(tk, site.width))
    W = add(Z, scale(tk, site.width))
    M = scale(add(Y, Z), Fraction(1, 2))
    V = add(X, scale(sub(X, M), site.depth))
    p0, p1 = curve.segment(k)
    length = sub(p1, p0)
    f = lambda p: dot(sub(p, p0), length) / dot(length, length)
    if not 0 < f(U) < f(W) < 1 or any(f(U) < s - k < f(W) for s in onK if s not in (low, high)):
        raise GeometryError("bend does not fit on segment " + str(k))
    if any(_inTriangle(p, U, W, V) for p in curve.points):
        raise GeometryError("a vertex lies in the region swept by the move")
    if not curve.closed and not _insideDisc([U, V, W]):
        raise GeometryError("bend leaves the disc")

    points = list(curve.points[:k + 1]) + [U, V, W] + list(curve.points[k + 1:])
    moved = PLCurve(points, closed=curve.closed)
    after = validate(moved)
    if not after.valid:
        raise GeometryError("triple move makes the curve non-generic: " + str(after.violations[0]))
    old = set(v.position for v in before.doublePoints)
    kept = old - {Y, Z}
    new = set(v.position for v in after.doublePoints)
    if len(new) != len(old) or not kept <= new:
        raise GeometryError("triple move must only move the two crossings of the pushed branch")
    shift = lambda s: s + 3 if s > k else s
    qj = _crossingOf(after, k + 1, shift(j))
    qi = _crossingOf(after, k + 2, shift(i))

    triangleBefore = _triangle(before, [pij, pki, pkj], [{i}, {k}, {j}])
    newPij = _findPoint(after, X)
    triangleAfter = _triangle(after, [newPij, qj, qi], [{shift(j)}, {k + 1, k + 2}, {shift(i)}])
    signBefore = triangleSign(triangleBefore)
    signAfter = triangleSign(triangleAfter)
    if signBefore == signAfter:
        raise GeometryError("vanishing triangles before and after have the same sign")
    return MoveReceipt(TRIPLE, shape, _rewrap(shape, moved), [qj.position, qi.position], [Y, Z], signAfter > 0, site,
                       signBefore, signAfter)


def applyMove(shape, site):
    """Applies the perestroika at site to a closed curve or a divide.

    Tangency moves always add the finger, so they are positive; the
    negative move is the inverted receipt. A triple move is positive when
    the newborn vanishing triangle is.
    """
    if site.kind in (DIRECT, INVERSE):
        return _finger(shape, site)
    if site.kind == TRIPLE:
        return _triple(shape, site)
    raise GeometryError("unknown move kind '" + str(site.kind) + "'")
