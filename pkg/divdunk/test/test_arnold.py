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

from divdunk.arnold.invariants import jMinus, jPlus, jTilde, strangeness, edgeWord, jTildeMinmax  # @UnresolvedImport
from divdunk.arnold.smoothing import smoothAll, regionProfile  # @UnresolvedImport
from divdunk.divides.divide import closure  # @UnresolvedImport
from divdunk.divides.standard import figureEight, standardCurve, standardDivide, threeChordDivide  # @UnresolvedImport
from divdunk.geometry.diagonal import diagonalize  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve, validate  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

SQUARE = PLCurve([(1, 0), (0, 1), (-1, 0), (0, -1)], closed=True)


def corpus():
    curves = [SQUARE, figureEight()] + [standardCurve(omega) for omega in range(0, 4)]
    curves += [closure(standardDivide(n)) for n in range(1, 3)]
    curves.append(closure(threeChordDivide()))
    curves += [closure(d) for d in randomDivides(6, 4, seed=11)]
    return curves


def arcBasepoints(curve):
    """One basepoint in the middle of every edge between double point visits."""
    report = validate(curve)
    length = curve.segmentCount()
    visits = sorted(p for v in report.doublePoints for p in v.visits)
    if not visits:
        return [Fraction(1, 2)]
    points = [(a + b) / 2 for a, b in zip(visits, visits[1:])]
    points.append(((visits[-1] + visits[0] + length) / 2) % length)
    return points


def test_figure_eight_row():
    curve = figureEight()
    assert (strangeness(curve), jPlus(curve), jMinus(curve)) == (0, 0, -1)


@pytest.mark.parametrize("omega", range(0, 7))
def test_standard_curve_row(omega):
    curve = standardCurve(omega)
    assert strangeness(curve) == omega
    assert jPlus(curve) == -2 * omega
    assert jMinus(curve) == -3 * omega


def test_j_tilde_values():
    assert jTilde(SQUARE) == 1
    assert jTilde(figureEight()) == 2
    assert jTilde(standardCurve(1)) == 4
    assert jTilde(standardCurve(2)) == 7


def test_region_profiles():
    single = regionProfile(smoothAll(SQUARE))
    assert [(r.index, r.euler) for r in single.bounded] == [(1, 1)]

    nested = regionProfile(smoothAll(standardCurve(1)))
    assert sorted((abs(r.index), r.euler) for r in nested.bounded) == [(1, 0), (2, 1)]

    apart = regionProfile(smoothAll(figureEight()))
    assert sorted((r.index, r.euler) for r in apart.bounded) == [(-1, 1), (1, 1)]


def test_smoothing_of_standard_curve_is_nested_family():
    family = smoothAll(standardCurve(3))
    assert len(family) == 4
    assert len(set(family.orientations)) == 1


def test_j_plus_minus_difference_counts_double_points():
    for curve in corpus():
        assert jPlus(curve) - jMinus(curve) == len(validate(curve).doublePoints)


def test_strangeness_is_basepoint_independent():
    for curve in corpus():
        values = set(strangeness(curve, b) for b in arcBasepoints(curve))
        assert len(values) == 1


def test_basepoint_on_double_point_is_rejected():
    curve = figureEight()
    report = validate(curve)
    with pytest.raises(GeometryError):
        edgeWord(curve, report, report.doublePoints[0].visits[0])


def test_invariants_ignore_orientation():
    for curve in corpus():
        back = curve.reversed()
        assert strangeness(back) == strangeness(curve)
        assert jPlus(back) == jPlus(curve)
        assert jMinus(back) == jMinus(curve)


def test_minmax_form_matches_j_tilde():
    for curve in corpus():
        assert jTildeMinmax(diagonalize(curve)) == jTilde(curve)


def test_minmax_form_needs_diagonal_position():
    with pytest.raises(GeometryError):
        jTildeMinmax(SQUARE)


def test_invariants_need_closed_curves():
    with pytest.raises(GeometryError):
        strangeness(standardDivide(1).curve)
    with pytest.raises(GeometryError):
        smoothAll(standardDivide(1).curve)
