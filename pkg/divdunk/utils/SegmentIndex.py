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

from intervaltree import IntervalTree

# Float padding around exact x-ranges; candidates are always re-checked exactly
_PAD = 1e-9


def _xRange(segment):
    (a, b) = segment
    lo = float(min(a[0], b[0]))
    hi = float(max(a[0], b[0]))
    return lo - _PAD * (1 + abs(lo)), hi + _PAD * (1 + abs(hi))


def _yOverlap(s, t):
    (a, b) = s
    (c, d) = t
    lo1 = float(min(a[1], b[1]))
    hi1 = float(max(a[1], b[1]))
    lo2 = float(min(c[1], d[1]))
    hi2 = float(max(c[1], d[1]))
    pad = _PAD * (1 + abs(lo1) + abs(hi1) + abs(lo2) + abs(hi2))
    return lo1 <= hi2 + pad and lo2 <= hi1 + pad


def segmentsToIntervalTree(segments):
    tree = IntervalTree()

    for i, segment in enumerate(segments):
        lo, hi = _xRange(segment)
        tree[lo:hi] = i

    return tree


def candidatePairs(segments, tree=None):
    """Yields index pairs (i, j), i < j, of segments whose bounding boxes meet.

    Pairs are produced in lexicographic order so callers stay deterministic.
    """
    if tree is None:
        tree = segmentsToIntervalTree(segments)

    for i, segment in enumerate(segments):
        lo, hi = _xRange(segment)
        hits = sorted(iv.data for iv in tree.overlap(lo, hi) if iv.data > i)
        for j in hits:
            if _yOverlap(segment, segments[j]):
                yield i, j


def crossPairs(segmentsA, segmentsB):
    """Yields index pairs (i, j) with segment i of A and segment j of B close."""
    tree = segmentsToIntervalTree(segmentsB)

    for i, segment in enumerate(segmentsA):
        lo, hi = _xRange(segment)
        hits = sorted(iv.data for iv in tree.overlap(lo, hi))
        for j in hits:
            if _yOverlap(segment, segmentsB[j]):
                yield i, j
