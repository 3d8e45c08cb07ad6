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
# Knot diagram of a divide from its doubled strand
#########################################################################

from fractions import Fraction

from divdunk.geometry.diagonal import diagonalize  # @UnresolvedImport
from divdunk.geometry.predicates import sub, det, intersectSegments, CROSS  # @UnresolvedImport
from divdunk.hirasawa.doubling import double, routeJumps, defaultOffset, defaultCut, CONNECTOR  # @UnresolvedImport
from divdunk.knots.pdcode import PDCode  # @UnresolvedImport
from divdunk.utils.SegmentIndex import candidatePairs  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, OracleError, debug  # @UnresolvedImport

MAX_ATTEMPTS = 24
ORIGINS = [(Fraction(0), Fraction(0)), (Fraction(1, 97), Fraction(1, 89)), (Fraction(-1, 83), Fraction(1, 79))]


class DiagramCrossing:

    def __init__(self, point, over, under, overParam, underParam):
        self.point = point
        self.over = over
        self.under = under
        self.overParam = overParam
        self.underParam = underParam

    def __repr__(self):
        return "DiagramCrossing(" + str(self.over) + " over " + str(self.under) + ")"


class DiagramLayout:
    """Pieces of the routed strand in knot order and the crossings among them."""

    def __init__(self, pieces, crossings, diagonal, eps):
        self.pieces = pieces
        self.crossings = crossings
        self.diagonal = diagonal
        self.eps = eps


def _adjacent(i, j, n):
    return j == i + 1 or (i == 0 and j == n - 1)


def findCrossings(pieces):
    segments = [(p.start, p.end) for p in pieces]
    n = len(pieces)
    crossings = []
    for i, j in candidatePairs(segments):
        p, q = pieces[i], pieces[j]
        hit = intersectSegments(p.start, p.end, q.start, q.end)
        if hit is None:
            continue
        if hit.kind != CROSS:
            if _adjacent(i, j, n) and hit.point is not None and (hit.point == p.end or hit.point == p.start) and hit.point in (q.start, q.end):
                continue
            raise GeometryError("strand pieces " + str(i) + " and " + str(j) + " meet non-transversally")
        if p.kind == CONNECTOR or q.kind == CONNECTOR:
            raise GeometryError("jump connector crosses the diagram")
        hp, hq = p.height(hit.point), q.height(hit.point)
        if hp == hq:
            raise GeometryError("strand pieces " + str(i) + " and " + str(j) + " cross at equal height")
        if hp < hq:
            crossings.append(DiagramCrossing(hit.point, i, j, hit.t, hit.u))
        else:
            crossings.append(DiagramCrossing(hit.point, j, i, hit.u, hit.t))
    return crossings


def _direction(piece):
    return sub(piece.end, piece.start)


def toPDCode(pieces, crossings):
    """Numbers arcs along the knot from the first piece and reads off X[a,b,c,d]."""
    if not crossings:
        return PDCode([], [], loops=1)
    visits = []
    for k, x in enumerate(crossings):
        visits.append((x.over + x.overParam, k, "O"))
        visits.append((x.under + x.underParam, k, "U"))
    visits.sort()
    total = len(visits)
    number = {}
    for j, (_, k, level) in enumerate(visits, 1):
        number[(k, level)] = j

    order = sorted(range(len(crossings)), key=lambda k: min(number[(k, "O")], number[(k, "U")]))
    codes = []
    signs = []
    for k in order:
        x = crossings[k]
        ju, jo = number[(k, "U")], number[(k, "O")]
        underIn, underOut = ju, ju % total + 1
        overIn, overOut = jo, jo % total + 1
        du = _direction(pieces[x.under])
        do = _direction(pieces[x.over])
        if det(do, du) > 0:
            codes.append((underIn, overOut, underOut, overIn))
            signs.append(1)
        else:
            codes.append((underIn, overIn, underOut, overOut))
            signs.append(-1)
    return PDCode(codes, signs)


def buildDiagram(divide, eps=None):
    """Knot diagram of the divide link: diagonalize, double, route the jumps
    and resolve every crossing by height.

    Degenerate placements are retried with a smaller offset, a different
    routing origin or a narrower jump window.
    """
    diagonal = diagonalize(divide.curve)
    baseEps = eps if eps is not None else defaultOffset(diagonal.curve)
    baseCut = defaultCut(diagonal.curve)
    lastError = None
    for attempt in range(MAX_ATTEMPTS):
        attemptEps = baseEps * Fraction(3, 4) ** (attempt // len(ORIGINS))
        cut = baseCut / (1 + attempt % 2)
        origin = ORIGINS[attempt % len(ORIGINS)]
        try:
            doubled = double(diagonal, attemptEps, cut)
            pieces = routeJumps(doubled, origin)
            crossings = findCrossings(pieces)
        except GeometryError as e:
            debug("buildDiagram: attempt " + str(attempt) + " rejected: " + str(e))
            lastError = e
            continue
        pd = toPDCode(pieces, crossings)
        pd.layout = DiagramLayout(pieces, crossings, diagonal, attemptEps)
        if pd.componentCount() != 1:
            raise OracleError("diagram of an I-divide has " + str(pd.componentCount()) + " components")
        return pd
    raise GeometryError("diagram construction failed: " + str(lastError))
