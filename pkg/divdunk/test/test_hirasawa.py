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

import pytest  # @UnresolvedImport

from divdunk.divides.casson import cassonFormula  # @UnresolvedImport
from divdunk.divides.standard import standardDivide, threeChordDivide  # @UnresolvedImport
from divdunk.geometry.diagonal import diagonalize  # @UnresolvedImport
from divdunk.hirasawa.diagram import buildDiagram  # @UnresolvedImport
from divdunk.hirasawa.doubling import double, routeJumps, EDGE, CAP, JUMP, PLUS, MINUS  # @UnresolvedImport
from divdunk.hirasawa.svg import svgText, exportSvg  # @UnresolvedImport
from divdunk.knots.alexander import alexander, alexanderCasson, oracleCasson  # @UnresolvedImport
from divdunk.knots.laurent import LaurentPoly  # @UnresolvedImport
from divdunk.knots.pdcode import formatPD, parsePD  # @UnresolvedImport
from divdunk.knots.skein import gaussCasson, linkingNumber, skeinTriples  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

TREFOIL_POLY = LaurentPoly({-1: 1, 0: -1, 1: 1})


def isClosedChain(pieces):
    return all(p.end == q.start for p, q in zip(pieces, pieces[1:] + pieces[:1]))


def test_doubled_divide_is_one_closed_strand():
    doubled = double(diagonalize(standardDivide(2).curve))
    assert isClosedChain(doubled.pieces)
    kinds = set(p.kind for p in doubled.pieces)
    assert EDGE in kinds and CAP in kinds
    sides = set(p.side for p in doubled.pieces)
    assert sides == set([PLUS, MINUS])
    assert doubled.eps > 0


def test_jump_routing_keeps_the_strand_closed():
    doubled = double(diagonalize(standardDivide(1).curve))
    pieces = routeJumps(doubled, (0, 0))
    assert isClosedChain(pieces)
    assert not any(p.kind == JUMP for p in pieces)
    assert len(pieces) == len(doubled.pieces) + 2 * len(doubled.jumps())


def test_trefoil_from_one_loop():
    pd = buildDiagram(standardDivide(1))
    assert pd.componentCount() == 1
    assert alexander(pd) == TREFOIL_POLY
    assert oracleCasson(pd) == 1


def test_embedded_arc_gives_unknot():
    pd = buildDiagram(standardDivide(0))
    assert pd.componentCount() == 1
    assert oracleCasson(pd) == 0


@pytest.mark.parametrize("n", range(0, 7))
def test_standard_divide_oracle(n):
    pd = buildDiagram(standardDivide(n))
    assert oracleCasson(pd) == n
    assert alexander(pd) == TREFOIL_POLY ** n
    assert gaussCasson(pd) == n


def test_three_chord_divide_agrees():
    divide = threeChordDivide()
    pd = buildDiagram(divide)
    assert oracleCasson(pd) == cassonFormula(divide)
    assert gaussCasson(pd) == cassonFormula(divide)


def test_diagram_is_deterministic():
    divide = threeChordDivide()
    assert formatPD(buildDiagram(divide)) == formatPD(buildDiagram(divide))


def test_random_divides_agree():
    for divide in randomDivides(50, 8, seed=2026):
        pd = buildDiagram(divide)
        assert pd.componentCount() == 1
        formula = cassonFormula(divide)
        assert alexanderCasson(pd) == formula
        assert gaussCasson(pd) == formula


def test_skein_relation_at_every_crossing_of_divide_diagrams():
    divides = [standardDivide(n) for n in range(1, 5)] + randomDivides(16, 3, seed=17)
    checked = 0
    for divide in divides:
        pd = buildDiagram(divide)
        for i, positive, negative, smoothed in skeinTriples(pd):
            assert smoothed.componentCount() == 2
            assert alexanderCasson(positive) - alexanderCasson(negative) == linkingNumber(smoothed)
            assert gaussCasson(positive) - gaussCasson(negative) == linkingNumber(smoothed)
        checked += 1
    assert checked >= 20


def test_svg_stages(tmp_path):
    divide = standardDivide(1)
    assert svgText(divide).count("<path") == 1

    doubled = double(diagonalize(divide.curve))
    assert svgText(doubled).count("<line") == len(doubled.pieces)

    pd = buildDiagram(divide)
    text = svgText(pd)
    assert text.count('class="gap"') == len(pd)
    assert svgText(pd) == text

    path = tmp_path / "d1.svg"
    exportSvg(pd, str(path))
    assert path.read_text().startswith("<?xml")


def test_svg_needs_a_layout():
    with pytest.raises(GeometryError):
        svgText(parsePD("X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]\n"))
