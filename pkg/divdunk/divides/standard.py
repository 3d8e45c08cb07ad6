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
# Standard curves and divides with known invariants
#########################################################################

from fractions import Fraction

from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve  # @UnresolvedImport


def figureEight():
    """K_0: figure-eight curve crossing itself once at the origin."""
    return PLCurve([(2, -2), (4, 0), (2, 2), (-2, -2), (-4, 0), (-2, 2)], closed=True)


def standardCurve(omega):
    """K_{omega+1}: counterclockwise hexagon with omega small interior loops
    hanging from its top edge."""
    R = 4 * omega + 1
    points = [(R, 0)]
    for k in range(omega):
        cx = R - 4 - 8 * k
        points.extend([(cx + 3, 0), (cx - 1, -2), (cx, -3), (cx + 1, -2), (cx - 3, 0)])
    points.extend([(-R, 0), (-R - 6, -6), (-R, -12), (R, -12), (R + 6, -6)])
    return PLCurve(points, closed=True)


def standardDivide(n):
    """D_n: the horizontal diameter carrying n small loops above it."""
    if n == 0:
        return Divide.fromPoints([(-1, 0), (1, 0)], name="D0")
    s = Fraction(1, 5 * n)
    points = [(-1, 0)]
    for k in range(n):
        cx = (8 * k - 4 * (n - 1)) * s
        points.extend([(cx - 3 * s, 0), (cx + s, 2 * s), (cx, 3 * s), (cx - s, 2 * s), (cx + 3 * s, 0)])
    points.append((1, 0))
    return Divide.fromPoints(points, name="D" + str(n))


def threeChordDivide():
    """Divide with three double points whose chords pairwise interleave."""
    points = [(-1, 0), (Fraction(3, 5), 0), (Fraction(2, 5), Fraction(3, 5)), (Fraction(-2, 5), Fraction(3, 5)),
              (0, Fraction(-2, 5)), (Fraction(2, 5), Fraction(-2, 5)), (0, Fraction(2, 5)), (Fraction(3, 5), Fraction(4, 5))]
    return Divide.fromPoints(points, name="interleaved3")
