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
from divdunk.geometry.predicates import sign, shoelace, intersectSegments  # @UnresolvedImport
from divdunk.geometry.winding import windingNumber  # @UnresolvedImport
from divdunk.utils.SegmentIndex import crossPairs  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, debug  # @UnresolvedImport

MAX_SHRINK = 40


class SmoothedFamily:
    """Disjoint embedded oriented circles and their containment forest.

    parents[k] is the index of the smallest circle enclosing circle k, or
    None for outermost circles.
    """

    def __init__(self, circles, orientations, parents):
        self.circles = circles
        self.orientations = orientations
        self.parents = parents

    def __len__(self):
        return len(self.circles)

    def children(self, k):
        return [c for c, p in enumerate(self.parents) if p == k]

    def ancestors(self, k):
        chain = []
        p = self.parents[k]
        while p is not None:
            chain.append(p)
            p = self.parents[p]
        return chain


class Region:

    def __init__(self, id, index, euler, circle=None):
        self.id = id
        self.index = index
        self.euler = euler
        self.circle = circle

    def __repr__(self):
        return "Region(" + str(self.id) + ", index " + str(self.index) + ", euler " + str(self.euler) + ")"


class RegionProfile:

    def __init__(self, regions):
        self.regions = regions

    @property
    def unbounded(self):
        return self.regions[0]

    @property
    def bounded(self):
        return self.regions[1:]

    def __iter__(self):
        return iter(self.regions)

    def __len__(self):
        return len(self.regions)


def _sortedVisits(report):
    visits = []
    for v in report.doublePoints:
        visits.append((v.visits[0], v.id, 0))
        visits.append((v.visits[1], v.id, 1))
    visits.sort()
    return visits


def _offsets(curve, visits, shrink):
    # Parameter offset per visit, a third of the free room on its segment
    offsets = []
    for m, (param, _, _) in enumerate(visits):
        k = param // 1
        gaps = [param - k, k + 1 - param]
        for other, _, _ in visits:
            if other != param and other // 1 == k:
                gaps.append(abs(other - param))
        offsets.append(min(gaps) / 3 * shrink)
    return offsets


def _trace(curve, report, shrink):
    visits = _sortedVisits(report)
    position = dict(((vid, b), m) for m, (_, vid, b) in enumerate(visits))
    offsets = _offsets(curve, visits, shrink)
    length = curve.segmentCount()
    count = len(visits)

    arcs = []
    for m in range(count):
        start = visits[m][0] + offsets[m]
        nxt = (m + 1) % count
        end = visits[nxt][0] - offsets[nxt]
        if nxt == 0:
            end += length
        arcs.append(curve.subpath(start, end))

    def following(m):
        # Arriving at visit m+1 we leave along the other branch of that vertex
        _, vid, b = visits[(m + 1) % count]
        return position[(vid, 1 - b)]

    circles = []
    used = set()
    for first in range(count):
        if first in used:
            continue
        points = []
        m = first
        while m not in used:
            used.add(m)
            points.extend(arcs[m])
            m = following(m)
        circles.append(PLCurve(points, closed=True))
    return circles


def _disjoint(circles):
    for circle in circles:
        report = validate(circle)
        if not report.valid or report.doublePoints:
            return False
    for a in range(len(circles)):
        for b in range(a + 1, len(circles)):
            sa = circles[a].segments()
            sb = circles[b].segments()
            for i, j in crossPairs(sa, sb):
                if intersectSegments(sa[i][0], sa[i][1], sb[j][0], sb[j][1]) is not None:
                    return False
    return True


def _forest(circles):
    enclosers = []
    for k, circle in enumerate(circles):
        sample = circle.points[0]
        enclosers.append([c for c in range(len(circles)) if c != k and windingNumber(circles[c], sample) != 0])
    parents = []
    for k in range(len(circles)):
        if not enclosers[k]:
            parents.append(None)
        else:
            parents.append(max(enclosers[k], key=lambda c: len(enclosers[c])))
    return parents


def smoothAll(curve):
    """Oriented smoothing of a closed curve at every double point."""
    if not curve.closed:
        raise GeometryError("smoothing is defined for closed curves only")
    report = validate(curve)
    report.raiseIfInvalid()

    if not report.doublePoints:
        circles = [curve]
    else:
        shrink = Fraction(1)
        for attempt in range(MAX_SHRINK):
            circles = _trace(curve, report, shrink)
            if _disjoint(circles):
                break
            debug("smoothAll: attempt " + str(attempt) + " rejected, shrinking")
            shrink /= 2
        else:
            raise GeometryError("smoothing failed after " + str(MAX_SHRINK) + " refinements")

    orientations = [sign(shoelace(c.points)) for c in circles]
    return SmoothedFamily(circles, orientations, _forest(circles))


def regionProfile(family):
    regions = [Region(0, 0, None)]
    for k in range(len(family)):
        index = family.orientations[k] + sum(family.orientations[a] for a in family.ancestors(k))
        euler = 1 - len(family.children(k))
        regions.append(Region(k + 1, index, euler, k))
    return RegionProfile(regions)
