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
# Seeded random divides from jump walks on a grid in the disc
#########################################################################

from fractions import Fraction
from math import isqrt

import numpy as np  # @UnresolvedImport

from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.utils.DivideReader import snapToCircle  # @UnresolvedImport
from divdunk.utils.misc import GeometryError, debug  # @UnresolvedImport

SPACING = Fraction(1, 10)
RADIUS = Fraction(4, 5)
# grid units; long jumps are what make a walk cross itself
MAX_JUMP = 8
MAX_STEPS = 14
MAX_TRIES = 10000


def _inside(i, j):
    return (i * i + j * j) * SPACING * SPACING <= RADIUS * RADIUS


def _grid():
    r = int(RADIUS / SPACING)
    return [(i, j) for i in range(-r, r + 1) for j in range(-r, r + 1) if _inside(i, j) and (i, j) != (0, 0)]


def _walk(rng, sites, length):
    path = [sites[int(rng.integers(len(sites)))]]
    for _ in range(length):
        i, j = path[-1]
        options = [(a, b) for (a, b) in sites if max(abs(a - i), abs(b - j)) <= MAX_JUMP and (a, b) not in path]
        if not options:
            return None
        path.append(options[int(rng.integers(len(options)))])
    return path


def _lengths(target, maxSteps):
    lo = 1 + isqrt(target)
    hi = max(lo, min(maxSteps, target + 4))
    return lo, hi


def randomDivide(rng, maxCrossings, maxSteps=MAX_STEPS, name=None):
    """Rejection-samples one valid divide whose double point count is drawn
    uniformly from 0..maxCrossings."""
    sites = _grid()
    target = int(rng.integers(0, maxCrossings + 1))
    lo, hi = _lengths(target, maxSteps)
    for attempt in range(MAX_TRIES):
        path = _walk(rng, sites, int(rng.integers(lo, hi + 1)))
        if path is None:
            continue
        inner = [(SPACING * i, SPACING * j) for (i, j) in path]
        points = [snapToCircle(inner[0])] + inner + [snapToCircle(inner[-1])]
        try:
            divide = Divide.fromPoints(points, name)
        except GeometryError as e:
            debug("randomDivide: rejected walk: " + str(e))
            continue
        if len(divide.doublePoints) == target:
            return divide
    raise GeometryError("no divide with " + str(target) + " double points after " + str(MAX_TRIES) + " walks")


def randomDivides(count, maxCrossings, seed, maxSteps=MAX_STEPS):
    rng = np.random.default_rng(seed)
    return [randomDivide(rng, maxCrossings, maxSteps, name="random-" + str(seed) + "-" + str(k)) for k in range(count)]
