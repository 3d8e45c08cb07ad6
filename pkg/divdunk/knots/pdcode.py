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
# Planar diagram codes of oriented knots and links
#########################################################################

import re

from divdunk.utils.misc import OracleError, ParseError  # @UnresolvedImport

_CROSSING = re.compile(r"^X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*(?:#\s*([+-]1))?\s*$")
_LOOPS = re.compile(r"^#\s*loops\s+(\d+)\s*$")


def _deriveSigns(crossings):
    """Orients every over-strand so that each arc has one head and one tail."""
    roles = {}
    positions = {}
    for i, x in enumerate(crossings):
        roles[(i, 0)] = "in"
        roles[(i, 2)] = "out"
        for slot, label in enumerate(x):
            positions.setdefault(label, []).append((i, slot))

    opposite = {"in": "out", "out": "in"}
    unresolved = list(range(len(crossings)))
    while True:
        changed = True
        while changed:
            changed = False
            for label, (p, q) in positions.items():
                if p in roles and q not in roles:
                    roles[q] = opposite[roles[p]]
                    changed = True
                elif q in roles and p not in roles:
                    roles[p] = opposite[roles[q]]
                    changed = True
                elif p in roles and roles[p] == roles[q]:
                    raise ParseError("arc " + str(label) + " cannot be oriented consistently")
            for i in range(len(crossings)):
                b, d = (i, 1), (i, 3)
                if b in roles and d not in roles:
                    roles[d] = opposite[roles[b]]
                    changed = True
                elif d in roles and b not in roles:
                    roles[b] = opposite[roles[d]]
                    changed = True
        unresolved = [i for i in unresolved if (i, 3) not in roles]
        if not unresolved:
            break
        # over-only component: orientation is free
        roles[(unresolved[0], 3)] = "in"
    return [1 if roles[(i, 3)] == "in" else -1 for i in range(len(crossings))]


class PDCode:
    """Crossings X[a,b,c,d], counterclockwise from the incoming under-strand.

    A positive crossing has its over-strand running d -> b, a negative one
    b -> d. Crossingless unknotted components are counted in loops.
    """

    def __init__(self, crossings, signs=None, loops=0, layout=None):
        self.crossings = [tuple(int(l) for l in x) for x in crossings]
        self.loops = loops
        self.layout = layout
        counts = {}
        for x in self.crossings:
            for label in x:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(l for l, c in counts.items() if c != 2)
        if bad:
            raise OracleError("arc labels not used exactly twice: " + ", ".join(str(l) for l in bad))
        if signs is None:
            signs = _deriveSigns(self.crossings)
        if len(signs) != len(self.crossings) or any(s not in (1, -1) for s in signs):
            raise OracleError("one sign +1 or -1 per crossing required")
        self.signs = list(signs)

    def __len__(self):
        return len(self.crossings)

    def __eq__(self, other):
        return isinstance(other, PDCode) and self.crossings == other.crossings and self.signs == other.signs and self.loops == other.loops

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "PDCode(" + str(len(self.crossings)) + " crossings, " + str(self.componentCount()) + " components)"

    def underIn(self, i):
        return self.crossings[i][0]

    def underOut(self, i):
        return self.crossings[i][2]

    def overIn(self, i):
        a, b, c, d = self.crossings[i]
        return d if self.signs[i] > 0 else b

    def overOut(self, i):
        a, b, c, d = self.crossings[i]
        return b if self.signs[i] > 0 else d

    def labels(self):
        return sorted(set(l for x in self.crossings for l in x))

    def successors(self):
        """Map from each arc label to the label following it along the orientation."""
        nxt = {}
        for i in range(len(self.crossings)):
            nxt[self.underIn(i)] = self.underOut(i)
            nxt[self.overIn(i)] = self.overOut(i)
        return nxt

    def heads(self):
        """Map from each arc label to (crossing, 'U' or 'O') where the arc ends."""
        result = {}
        for i in range(len(self.crossings)):
            result[self.underIn(i)] = (i, "U")
            result[self.overIn(i)] = (i, "O")
        return result

    def components(self):
        """Cyclic label sequences, ordered by smallest label; loops are not listed."""
        nxt = self.successors()
        seen = set()
        cycles = []
        for start in self.labels():
            if start in seen:
                continue
            cycle = []
            label = start
            while label not in seen:
                seen.add(label)
                cycle.append(label)
                label = nxt[label]
            cycles.append(cycle)
        return cycles

    def componentCount(self):
        return len(self.components()) + self.loops

    def componentOf(self):
        result = {}
        for k, cycle in enumerate(self.components()):
            for label in cycle:
                result[label] = k
        return result

    def writhe(self):
        return sum(self.signs)

    def relabel(self):
        """Renumbers arcs 1..2n consecutively along each component."""
        mapping = {}
        for cycle in self.components():
            for label in cycle:
                mapping[label] = len(mapping) + 1
        crossings = [tuple(mapping[l] for l in x) for x in self.crossings]
        return PDCode(crossings, self.signs, self.loops, self.layout)

    def removeCrossings(self, indices, pairs):
        """Deletes crossings and identifies the arc labels paired across them.

        Label classes left without any occurrence become free loops.
        """
        parent = {}

        def find(l):
            parent.setdefault(l, l)
            while parent[l] != l:
                parent[l] = parent[parent[l]]
                l = parent[l]
            return l

        for u, v in pairs:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        removed = set(indices)
        kept = [i for i in range(len(self.crossings)) if i not in removed]
        crossings = [tuple(find(l) for l in self.crossings[i]) for i in kept]
        signs = [self.signs[i] for i in kept]
        alive = set(l for x in crossings for l in x)
        roots = set(find(l) for l in parent)
        loops = self.loops + len(roots - alive)
        return PDCode(crossings, signs, loops).relabel()

    def straightPairs(self, i):
        return [(self.underIn(i), self.underOut(i)), (self.overIn(i), self.overOut(i))]

    def smoothingPairs(self, i):
        return [(self.underIn(i), self.overOut(i)), (self.overIn(i), self.underOut(i))]

    def switched(self, i):
        crossings = list(self.crossings)
        a, b, c, d = crossings[i]
        crossings[i] = (d, a, b, c) if self.signs[i] > 0 else (b, c, d, a)
        signs = list(self.signs)
        signs[i] = -signs[i]
        return PDCode(crossings, signs, self.loops)

    def smoothed(self, i):
        return self.removeCrossings([i], self.smoothingPairs(i))

    def mirror(self):
        pd = self
        for i in range(len(self.crossings)):
            pd = pd.switched(i)
        return pd

    def gaussCode(self, start=None):
        """Over/under sequence per component, e.g. [[(1, 'O', 1), (2, 'U', -1)]]."""
        heads = self.heads()
        nxt = self.successors()
        result = []
        for cycle in self.components():
            label = cycle[0] if start is None or start not in cycle else start
            word = []
            for _ in range(len(cycle)):
                i, level = heads[label]
                word.append((i + 1, level, self.signs[i]))
                label = nxt[label]
            result.append(word)
        return result


def findKink(pd):
    for i, x in enumerate(pd.crossings):
        if len(set(x)) < 4:
            return i
    return None


def findBigon(pd):
    overAt = {}
    underAt = {}
    for i in range(len(pd.crossings)):
        for l in (pd.overIn(i), pd.overOut(i)):
            overAt.setdefault(l, []).append(i)
        for l in (pd.underIn(i), pd.underOut(i)):
            underAt.setdefault(l, []).append(i)
    for l, at in sorted(overAt.items()):
        if len(at) != 2 or at[0] == at[1]:
            continue
        i, j = at
        if pd.signs[i] == pd.signs[j]:
            continue
        for m, under in underAt.items():
            if sorted(under) == sorted(at):
                return i, j
    return None


def simplify(pd):
    """Removes kinks and clasps (Reidemeister I and II) until none remain."""
    while True:
        i = findKink(pd)
        if i is not None:
            pd = pd.removeCrossings([i], pd.straightPairs(i))
            continue
        bigon = findBigon(pd)
        if bigon is not None:
            i, j = bigon
            pd = pd.removeCrossings([i, j], pd.straightPairs(i) + pd.straightPairs(j))
            continue
        return pd


def parsePD(text):
    crossings = []
    signs = []
    loops = 0
    for n, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        m = _LOOPS.match(stripped)
        if m is not None:
            loops = int(m.group(1))
            continue
        if stripped.startswith("#"):
            continue
        m = _CROSSING.match(stripped)
        if m is None:
            raise ParseError("malformed crossing '" + stripped + "'", line=n, column=line.find(stripped) + 1)
        crossings.append(tuple(int(m.group(k)) for k in range(1, 5)))
        signs.append(int(m.group(5)) if m.group(5) else None)
    if any(s is None for s in signs):
        if any(s is not None for s in signs):
            raise ParseError("either all or no crossings carry a sign", line=1, column=1)
        signs = None
    return PDCode(crossings, signs, loops)


def formatPD(pd):
    lines = []
    if pd.loops:
        lines.append("# loops " + str(pd.loops))
    for x, s in zip(pd.crossings, pd.signs):
        lines.append("X[" + ",".join(str(l) for l in x) + "] # " + ("+1" if s > 0 else "-1"))
    return "\n".join(lines) + "\n"


def formatGauss(pd):
    return "\n".join(" ".join(level + str(i) + ("+" if s > 0 else "-") for i, level, s in word) for word in pd.gaussCode()) + "\n"
