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
# Degree-two Gauss diagram count and crossing changes
#########################################################################

from divdunk.utils.misc import OracleError  # @UnresolvedImport

SWITCH = "switch"
SMOOTH = "smooth"


def gaussCasson(pd):
    """Signed count of crossing pairs met as U_a .. O_b .. O_a .. U_b from the basepoint."""
    if pd.componentCount() != 1:
        raise OracleError("Gauss diagram count needs a knot, got " + str(pd.componentCount()) + " components")
    if len(pd) == 0:
        return 0
    word = pd.gaussCode()[0]
    under = {}
    over = {}
    sign = {}
    for k, (i, level, s) in enumerate(word):
        (under if level == "U" else over)[i] = k
        sign[i] = s
    total = 0
    for a in under:
        if under[a] > over[a]:
            continue
        for b in under:
            if under[a] < over[b] < over[a] < under[b]:
                total += sign[a] * sign[b]
    return total


def linkingNumber(pd):
    if pd.componentCount() != 2:
        raise OracleError("linking number needs 2 components, got " + str(pd.componentCount()))
    component = pd.componentOf()
    total = sum(s for i, s in enumerate(pd.signs) if component[pd.underIn(i)] != component[pd.overIn(i)])
    return total // 2


class CrossingChange:

    def __init__(self, crossing, mode):
        if mode not in (SWITCH, SMOOTH):
            raise ValueError("unknown crossing change '" + str(mode) + "'")
        self.crossing = crossing
        self.mode = mode

    def __repr__(self):
        return "CrossingChange(" + str(self.crossing) + ", " + self.mode + ")"


def applyChange(pd, change):
    if not 0 <= change.crossing < len(pd):
        raise OracleError("no crossing " + str(change.crossing) + " in a diagram with " + str(len(pd)) + " crossings")
    if change.mode == SWITCH:
        return pd.switched(change.crossing)
    return pd.smoothed(change.crossing)


def skeinTriples(pd):
    """(positive, negative, smoothed) diagrams for every crossing of a knot diagram."""
    for i in range(len(pd)):
        if pd.signs[i] > 0:
            positive, negative = pd, pd.switched(i)
        else:
            positive, negative = pd.switched(i), pd
        yield i, positive, negative, pd.smoothed(i)
