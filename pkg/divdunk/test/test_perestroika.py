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

import pytest  # @UnresolvedImport

from divdunk.arnold.invariants import jMinus, jPlus, jTilde, strangeness  # @UnresolvedImport
from divdunk.divides.casson import cassonFormula  # @UnresolvedImport
from divdunk.divides.divide import Divide, closure, smoothAt  # @UnresolvedImport
from divdunk.divides.standard import figureEight, standardCurve, standardDivide  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve, validate  # @UnresolvedImport
from divdunk.geometry.winding import vertexIndex, windingNumber  # @UnresolvedImport
from divdunk.hirasawa.diagram import buildDiagram  # @UnresolvedImport
from divdunk.knots.alexander import alexanderCasson  # @UnresolvedImport
from divdunk.perestroika.chmutov import chmutovDelta, chmutovDeltaInverse, chmutovDeltaDirect, labelMove  # @UnresolvedImport
from divdunk.perestroika.moves import MoveSite, VanishingTriangle, DIRECT, INVERSE, TRIPLE, applyMove, triangleSign  # @UnresolvedImport
from divdunk.perestroika.sites import findTangencySites, findTriangleSites  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

# three long branches around a central triangle, joined outside it
TRIANGLE = PLCurve([(-2, 0), (6, 0), (5, Fraction(-3, 2)), (1, Fraction(9, 2)), (3, Fraction(9, 2)), (-1, Fraction(-3, 2))], closed=True)

# the same triangle shrunk into the disc as a divide
TRIANGLE_DIVIDE = Divide.fromPoints([(-1, 0), (Fraction(-2, 5), Fraction(-1, 10)), (Fraction(2, 5), Fraction(-1, 10)), (Fraction(3, 10), Fraction(-1, 4)),
                                     (Fraction(-1, 10), Fraction(7, 20)), (Fraction(1, 10), Fraction(7, 20)), (Fraction(-3, 10), Fraction(-1, 4)), (0, -1)], name="triangle")


def deltas(before, after):
    return (strangeness(after) - strangeness(before), jPlus(after) - jPlus(before), jMinus(after) - jMinus(before))


def closedCorpus():
    return [figureEight(), standardCurve(1), standardCurve(2), TRIANGLE] + [closure(d) for d in randomDivides(12, 5, seed=5)]


def divideCorpus():
    return [standardDivide(n) for n in range(1, 4)] + [TRIANGLE_DIVIDE] + randomDivides(12, 4, seed=8)


def casson(divide):
    return cassonFormula(divide), alexanderCasson(buildDiagram(divide))


def test_triangle_curve():
    report = validate(TRIANGLE)
    assert report.valid
    assert sorted(tuple(sorted(v.segments)) for v in report.doublePoints) == [(0, 2), (0, 4), (2, 4)]


def test_tangency_axioms():
    count = 0
    for curve in closedCorpus():
        for site, receipt in findTangencySites(curve, limit=15):
            assert receipt.positive
            assert len(receipt.created) == 2
            assert len(validate(receipt.after).doublePoints) == len(validate(curve).doublePoints) + 2
            if receipt.kind == DIRECT:
                assert deltas(curve, receipt.after) == (0, 2, 0)
            else:
                assert deltas(curve, receipt.after) == (0, 0, -2)
            count += 1
    assert count >= 100


def test_finger_kind_matches_the_measured_jump():
    kinds = set()
    for divide in divideCorpus():
        for site, receipt in findTangencySites(divide, limit=5):
            jump = deltas(closure(receipt.before), closure(receipt.after))
            assert jump == ((0, 2, 0) if receipt.kind == DIRECT else (0, 0, -2))
            kinds.add(receipt.kind)
    assert kinds == {DIRECT, INVERSE}


def test_direct_fingers_on_a_single_crossing():
    found = findTangencySites(standardDivide(1))
    assert any(receipt.kind == DIRECT for site, receipt in found)


def test_inverse_tangency_identities():
    count = 0
    for divide in divideCorpus():
        for site, receipt in findTangencySites(divide, limit=5):
            if receipt.kind != INVERSE:
                continue
            labels = labelMove(receipt)
            sa = smoothAt(receipt.after, labels.a)
            sb = smoothAt(receipt.after, labels.b)
            index = vertexIndex(sa.oPart, labels.b)
            assert index == windingNumber(sb.oPart, labels.a.position)
            assert sa.crossings == sb.crossings
            assert jTilde(sa.oPart) == jTilde(sb.oPart) - 2 * labels.sigma * index + 1
            count += 1
    assert count >= 5


def test_triple_axioms():
    count = 0
    for curve in closedCorpus():
        for site, receipt in findTriangleSites(curve, limit=6):
            assert receipt.triangleBefore == -receipt.triangleAfter
            step = 1 if receipt.positive else -1
            assert deltas(curve, receipt.after) == (step, 0, 0)
            count += 1
    assert count >= 3


def test_triangle_curve_has_three_triple_sites():
    found = findTriangleSites(TRIANGLE)
    assert len(found) == 3
    assert all(receipt.kind == TRIPLE for site, receipt in found)


def test_inverted_moves_negate_deltas():
    curve = standardCurve(2)
    for site, receipt in findTangencySites(curve, limit=3) + findTriangleSites(TRIANGLE, limit=3):
        back = receipt.inverted()
        assert back.positive != receipt.positive
        assert back.before is receipt.after
        forward = deltas(receipt.before, receipt.after)
        assert deltas(back.before, back.after) == tuple(-d for d in forward)


def test_invalid_sites_are_rejected():
    divide = standardDivide(0)
    # a diameter alone has no second branch to push against
    with pytest.raises(GeometryError):
        applyMove(divide, MoveSite(DIRECT, (0, 0)))
    with pytest.raises(GeometryError):
        applyMove(divide, MoveSite("swirl", (0, 1)))


def test_move_log_names_the_move():
    site, receipt = findTangencySites(standardCurve(1), limit=1)[0]
    log = receipt.moveLog()
    assert log.startswith(receipt.kind)
    assert "created=2" in log


def test_triangle_sign_counts_agreeing_sides():
    agreeing = VanishingTriangle([None, None, None], [(0, Fraction(1, 10), 1, Fraction(2, 10)), (1, Fraction(11, 10), 2, Fraction(12, 10)),
                                                     (2, Fraction(21, 10), 0, Fraction(22, 10))])
    assert triangleSign(agreeing) == -1
    oneReversed = VanishingTriangle([None, None, None], [(0, Fraction(2, 10), 1, Fraction(1, 10)), (1, Fraction(11, 10), 2, Fraction(12, 10)),
                                                        (2, Fraction(21, 10), 0, Fraction(22, 10))])
    assert triangleSign(oneReversed) == 1


def test_chmutov_forms_match_both_pipelines():
    count = 0
    for divide in divideCorpus():
        before = casson(divide)
        for site, receipt in findTangencySites(divide, limit=5):
            predicted = chmutovDelta(receipt)
            if receipt.kind == INVERSE:
                assert predicted == chmutovDeltaInverse(receipt)
            else:
                assert predicted == chmutovDeltaDirect(receipt)
            after = casson(receipt.after)
            assert after[0] - before[0] == predicted
            assert after[1] - before[1] == predicted
            count += 1
    assert count >= 50


def test_labels_of_a_finger():
    site, receipt = findTangencySites(standardDivide(1), limit=1)[0]
    labels = labelMove(receipt)
    assert labels.a.visits[0] < labels.b.visits[0]
    assert labels.sigma in (1, -1)
    assert labels.outerCrossings >= 0


def test_chmutov_needs_a_divide():
    site, receipt = findTangencySites(standardCurve(1), limit=1)[0]
    with pytest.raises(GeometryError):
        chmutovDelta(receipt)


def test_triple_moves_keep_casson():
    count = 0
    for divide in divideCorpus():
        before = None
        for site, receipt in findTriangleSites(divide, limit=3):
            if before is None:
                before = casson(divide)
            assert casson(receipt.after) == before
            count += 1
    assert count >= 3
