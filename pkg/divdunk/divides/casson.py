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

from divdunk.arnold.invariants import jTilde, jPlus, strangeness  # @UnresolvedImport
from divdunk.divides.divide import closure, smoothAt, chordDiagram  # @UnresolvedImport
from divdunk.geometry.plcurve import validate  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, OracleError  # @UnresolvedImport


class VertexTerm:

    def __init__(self, vertex, jTilde, crossings):
        self.vertex = vertex
        self.jTilde = jTilde
        self.crossings = crossings

    @property
    def value(self):
        return self.jTilde + Fraction(self.crossings, 4)


class CassonTerms:
    """Per-vertex and closure contributions of the Casson formula."""

    def __init__(self, vertexTerms, closurePlus, closureStrangeness):
        self.vertexTerms = vertexTerms
        self.closurePlus = closurePlus
        self.closureStrangeness = closureStrangeness

    @property
    def closureTerm(self):
        return Fraction(self.closurePlus + 2 * self.closureStrangeness, 4)

    @property
    def total(self):
        value = sum((t.value for t in self.vertexTerms), Fraction(0)) + self.closureTerm
        if value.denominator != 1:
            raise OracleError("Casson formula total is not an integer: " + str(value))
        return int(value)


def cassonTerms(divide):
    terms = []
    for v in divide.doublePoints:
        smoothing = smoothAt(divide, v)
        terms.append(VertexTerm(v, jTilde(smoothing.oPart), smoothing.crossings))
    closed = closure(divide)
    return CassonTerms(terms, jPlus(closed), strangeness(closed))


def cassonFormula(divide, debug=False):
    value = cassonTerms(divide).total
    if debug:
        other = cassonTerms(divide.reversed()).total
        if other != value:
            raise OracleError("Casson formula depends on orientation: " + str(value) + " != " + str(other))
    return value


def closureCombination(divide):
    # J+ + 2 St of the closure; independent of the divide's orientation
    closed = closure(divide)
    return jPlus(closed) + 2 * strangeness(closed)


def isTreeLike(divide):
    return chordDiagram(divide).intersectionCount() == 0


def treeLikeCasson(divide):
    if not isTreeLike(divide):
        raise GeometryError("divide is not tree-like")
    return sum(jTilde(smoothAt(divide, v).oPart) for v in divide.doublePoints)


def slalomValue(divide):
    if not isTreeLike(divide):
        raise GeometryError("divide is not tree-like")
    total = 0
    for v in divide.doublePoints:
        total += 1 + len(validate(smoothAt(divide, v).oPart).doublePoints)
    return total


def chordIntersectionTotal(divide):
    return Fraction(chordDiagram(divide).intersectionCount(), 2)
