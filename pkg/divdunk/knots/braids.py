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
# PD codes of closed braids
#########################################################################

from divdunk.knots.pdcode import PDCode  # @UnresolvedImport
from divdunk.utils.misc import OracleError  # @UnresolvedImport


def braidClosure(word, strands=None):
    """PD code of the closure of a braid word.

    The word lists generators as signed integers: k is sigma_k, with the
    strand coming from position k passing over, and -k is its inverse.
    Strands run upwards and are numbered from 1. Strands no generator
    touches become free loops.
    """
    word = [int(g) for g in word]
    if strands is None:
        strands = max([abs(g) for g in word] + [0]) + 1
    if any(g == 0 or abs(g) >= strands for g in word):
        raise OracleError("braid word " + str(word) + " does not fit on " + str(strands) + " strands")

    current = list(range(1, strands + 1))
    fresh = strands + 1
    crossings = []
    signs = []
    for g in word:
        k = abs(g) - 1
        p, q = current[k], current[k + 1]
        r, s = fresh, fresh + 1
        fresh += 2
        if g > 0:
            crossings.append((q, s, r, p))
            signs.append(1)
        else:
            crossings.append((p, q, s, r))
            signs.append(-1)
        current[k], current[k + 1] = r, s

    # the top of each strand is glued to the bottom of the same position
    glue = dict((top, bottom) for bottom, top in zip(range(1, strands + 1), current) if top != bottom)
    loops = sum(1 for bottom, top in zip(range(1, strands + 1), current) if top == bottom)
    crossings = [tuple(glue.get(l, l) for l in x) for x in crossings]
    return PDCode(crossings, signs, loops).relabel()
