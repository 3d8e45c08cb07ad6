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
# Casson invariant jumps under positive self-tangency moves of divides
#########################################################################

from divdunk.arnold.invariants import jTilde  # @UnresolvedImport
from divdunk.divides.divide import Divide, smoothAt  # @UnresolvedImport
from divdunk.geometry.predicates import shoelace, sign  # @UnresolvedImport
from divdunk.geometry.winding import vertexIndex, windingNumber  # @UnresolvedImport
from divdunk.perestroika.moves import DIRECT, INVERSE  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, OracleError  # @UnresolvedImport


class TangencyLabels:
    """The two double points a move creates: a is met first along the divide.

    sigma is the orientation sign of the bigon between them and
    outerCrossings counts double points joining the piece before the move
    with the piece after it.
    """

    def __init__(self, a, b, sigma, outerCrossings):
        self.a = a
        self.b = b
        self.sigma = sigma
        self.outerCrossings = outerCrossings


def labelMove(receipt):
    if not isinstance(receipt.after, Divide) or not isinstance(receipt.before, Divide):
        raise GeometryError("tangency deltas are defined for divides")
    if not receipt.positive:
        raise GeometryError("tangency deltas are defined for positive moves")
    divide = receipt.after
    old = set(v.position for v in receipt.before.doublePoints)
    created = sorted((v for v in divide.doublePoints if v.position not in old), key=lambda v: v.visits[0])
    if len(created) != 2:
        raise GeometryError("expected two new double points, found " + str(len(created)))
    a, b = created
    curve = divide.curve
    bigon = curve.subpath(a.visits[0], b.visits[0]) + curve.subpath(b.visits[1], a.visits[1])[1:]
    sigma = -sign(shoelace(bigon))
    first = min(a.visits[0], b.visits[0])
    last = max(a.visits[1], b.visits[1])
    outer = sum(1 for v in divide.doublePoints if v.visits[0] < first and v.visits[1] > last)
    return TangencyLabels(a, b, sigma, outer)


def chmutovDeltaInverse(receipt):
    """Casson jump of a positive inverse self-tangency move, computed from
    the new double point a and again from b; both must agree."""
    if receipt.kind != INVERSE:
        raise GeometryError("not an inverse self-tangency move")
    labels = labelMove(receipt)
    divide = receipt.after
    sa = smoothAt(divide, labels.a)
    sb = smoothAt(divide, labels.b)
    indB = vertexIndex(sa.oPart, labels.b)
    indA = windingNumber(sb.oPart, labels.a.position)
    fromA = 2 * jTilde(sa.oPart) + 2 * labels.sigma * indB + sa.crossings + 2 * labels.outerCrossings - 1
    fromB = 2 * jTilde(sb.oPart) - 2 * labels.sigma * indA + sb.crossings + 2 * labels.outerCrossings + 1
    if fromA != fromB:
        raise OracleError("inverse tangency delta disagrees: " + str(fromA) + " from a, " + str(fromB) + " from b")
    return fromA


def chmutovDeltaDirect(receipt):
    if receipt.kind != DIRECT:
        raise GeometryError("not a direct self-tangency move")
    labels = labelMove(receipt)
    divide = receipt.after
    sa = smoothAt(divide, labels.a)
    sb = smoothAt(divide, labels.b)
    fromA = 2 * jTilde(sa.oPart) + sa.crossings
    fromB = 2 * jTilde(sb.oPart) + sb.crossings
    if fromA != fromB:
        raise OracleError("direct tangency delta disagrees: " + str(fromA) + " from a, " + str(fromB) + " from b")
    return fromA


def chmutovDelta(receipt):
    if receipt.kind == INVERSE:
        return chmutovDeltaInverse(receipt)
    return chmutovDeltaDirect(receipt)
