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
# Best-effort search for places where a perestroika applies
#########################################################################

from fractions import Fraction
from itertools import combinations

from divdunk.geometry.plcurve import validate  # @UnresolvedImport
from divdunk.perestroika.moves import MoveSite, applyMove, DIRECT, TRIPLE, shapeCurve  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

FINGER_SHAPES = [(Fraction(1, 8), Fraction(1, 4)), (Fraction(1, 16), Fraction(1, 8)), (Fraction(1, 32), Fraction(1, 16))]
FINGER_SPOTS = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)]
BEND_SHAPES = [(Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 8), Fraction(1, 4)), (Fraction(1, 16), Fraction(1, 8))]


def findTangencySites(shape, limit=None):
    """Finger moves that validate, as (site, receipt) pairs, in segment order."""
    curve = shapeCurve(shape)
    n = curve.segmentCount()
    found = []
    for i in range(n):
        for j in range(n):
            if abs(i - j) <= 1 or (curve.closed and abs(i - j) == n - 1):
                continue
            receipt = _firstFinger(shape, i, j)
            if receipt is not None:
                found.append((receipt.site, receipt))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def _firstFinger(shape, i, j):
    for at in FINGER_SPOTS:
        for target in FINGER_SPOTS:
            for width, depth in FINGER_SHAPES:
                site = MoveSite(DIRECT, (i, j), at, target, width, depth)
                try:
                    return applyMove(shape, site)
                except GeometryError:
                    continue
    return None


def findTriangleSites(shape, limit=None):
    """Triple moves over triangles of double points whose three branches
    pairwise cross, one site per pushed branch."""
    curve = shapeCurve(shape)
    report = validate(curve)
    report.raiseIfInvalid()
    bySegments = {}
    for v in report.doublePoints:
        bySegments.setdefault(frozenset(v.segments), []).append(v)

    found = []
    segments = sorted(set(s for v in report.doublePoints for s in v.segments))
    for i, j, k in combinations(segments, 3):
        pairs = [frozenset((i, j)), frozenset((j, k)), frozenset((k, i))]
        if any(len(bySegments.get(p, [])) != 1 for p in pairs):
            continue
        for branches in ((i, j, k), (j, k, i), (k, i, j)):
            receipt = _firstBend(shape, branches)
            if receipt is not None:
                found.append((receipt.site, receipt))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def _firstBend(shape, branches):
    for width, depth in BEND_SHAPES:
        site = MoveSite(TRIPLE, branches, width=width, depth=depth)
        try:
            return applyMove(shape, site)
        except GeometryError:
            continue
    return None
