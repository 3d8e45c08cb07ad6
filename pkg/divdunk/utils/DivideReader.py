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
# Reading and writing DivideFiles and the one-line path language
#########################################################################

import math
from fractions import Fraction

from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve  # @UnresolvedImport
from divdunk.utils.misc import ParseError, parseRational, formatPoint  # @UnresolvedImport
from divdunk.version import __divide_version__  # @UnresolvedImport

HEADER = "#divdunk divide"
DIVIDE = "divide"
CLOSED = "closed"

# Largest denominator of a snapped circle parameter
SNAP_DENOMINATOR = 10 ** 6


class DivideEntry:

    def __init__(self):
        self.version = __divide_version__
        self.kind = DIVIDE
        self.name = None
        self.seed = None
        self.source = None
        self.points = []

    def __repr__(self):
        return "DivideEntry(" + str(self.name) + ", " + self.kind + ", " + str(len(self.points)) + " points)"

    def toShape(self):
        if self.kind == CLOSED:
            return PLCurve(self.points, closed=True)
        return Divide.fromPoints(self.points, self.name)


def _rational(token, line, column):
    try:
        return parseRational(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("invalid rational literal '" + token + "'", line=line, column=column)


def _tokens(text):
    # (token, column) pairs, columns 1-based
    result = []
    k = 0
    while k < len(text):
        if text[k].isspace():
            k += 1
            continue
        start = k
        while k < len(text) and not text[k].isspace():
            k += 1
        result.append((text[start:k], start + 1))
    return result


def _checkDegenerate(points, lines):
    for k in range(1, len(points)):
        if points[k] == points[k - 1]:
            raise ParseError("degenerate segment", line=lines[k][0], column=lines[k][1])


def parseDivideFile(text):
    entry = DivideEntry()
    lines = []
    seenHeader = False
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(HEADER):
                version = line[len(HEADER):].strip()
                if version != __divide_version__:
                    raise ParseError("unsupported divide format version '" + version + "'", line=n, column=len(HEADER) + 2)
                entry.version = version
                seenHeader = True
            elif line.startswith("#name"):
                entry.name = line[5:].strip()
            elif line.startswith("#seed"):
                entry.seed = line[5:].strip()
            elif line.startswith("#source"):
                entry.source = line[7:].strip()
            continue
        if not seenHeader:
            raise ParseError("missing '" + HEADER + " " + __divide_version__ + "' header", line=n, column=1)
        tokens = _tokens(raw)
        if tokens[0][0] == "kind":
            if len(tokens) != 2 or tokens[1][0] not in (DIVIDE, CLOSED):
                raise ParseError("kind must be 'divide' or 'closed'", line=n, column=tokens[0][1])
            entry.kind = tokens[1][0]
            continue
        if len(tokens) != 2:
            raise ParseError("expected 'x y'", line=n, column=tokens[0][1])
        entry.points.append((_rational(tokens[0][0], n, tokens[0][1]), _rational(tokens[1][0], n, tokens[1][1])))
        lines.append((n, tokens[0][1]))
    if not seenHeader:
        raise ParseError("empty divide file", line=1, column=1)
    _checkDegenerate(entry.points, lines)
    return entry


def snapToCircle(point):
    """Nearest-looking rational point of the unit circle, exact if already on it."""
    x, y = Fraction(point[0]), Fraction(point[1])
    if x * x + y * y == 1:
        return (x, y)
    r = math.hypot(float(x), float(y))
    if r == 0:
        raise ValueError("cannot snap the centre of the disc")
    mirrored = x < 0
    t = Fraction(float(y) / (r + abs(float(x)))).limit_denominator(SNAP_DENOMINATOR)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    return (-c if mirrored else c, s)


def parsePathDSL(text, snap=True):
    """S x y L x y ... E on one line; endpoints are snapped onto the circle."""
    tokens = _tokens(text.strip().splitlines()[0] if text.strip() else "")
    entry = DivideEntry()
    entry.source = "path"
    lines = []
    k = 0
    ended = False
    while k < len(tokens):
        word, column = tokens[k]
        if ended:
            raise ParseError("text after 'E'", line=1, column=column)
        if word == "E":
            ended = True
            k += 1
            continue
        if word not in ("S", "L") or (word == "S") != (k == 0):
            raise ParseError("expected " + ("'S'" if k == 0 else "'L' or 'E'") + ", got '" + word + "'", line=1, column=column)
        if k + 2 >= len(tokens):
            raise ParseError("missing coordinates after '" + word + "'", line=1, column=column)
        entry.points.append((_rational(tokens[k + 1][0], 1, tokens[k + 1][1]), _rational(tokens[k + 2][0], 1, tokens[k + 2][1])))
        lines.append((1, column))
        k += 3
    if not ended:
        raise ParseError("missing terminator 'E'", line=1, column=len(text.rstrip()) + 1)
    if len(entry.points) < 2:
        raise ParseError("a path needs at least two points", line=1, column=1)
    _checkDegenerate(entry.points, lines)
    if snap:
        for k, (line, column) in ((0, lines[0]), (-1, lines[-1])):
            try:
                entry.points[k] = snapToCircle(entry.points[k])
            except ValueError as e:
                raise ParseError(str(e), line=line, column=column)
    return entry


def parseEntry(text):
    stripped = text.lstrip()
    if stripped.startswith("S"):
        return parsePathDSL(text)
    return parseDivideFile(text)


def parseDivide(text):
    """Divide or closed curve from DivideFile or path text, validated."""
    return parseEntry(text).toShape()


def readDivide(path):
    with open(path, "r") as f:
        entry = parseEntry(f.read())
    if entry.name is None:
        entry.name = path
    return entry.toShape()


def formatDivide(shape, name=None, seed=None, source=None):
    curve = shape.curve if isinstance(shape, Divide) else shape
    if name is None and isinstance(shape, Divide):
        name = shape.name
    lines = [HEADER + " " + __divide_version__]
    if name is not None:
        lines.append("#name " + str(name))
    if seed is not None:
        lines.append("#seed " + str(seed))
    if source is not None:
        lines.append("#source " + str(source))
    lines.append("kind " + (CLOSED if curve.closed else DIVIDE))
    lines.extend(formatPoint(p) for p in curve.points)
    return "\n".join(lines) + "\n"


def writeDivide(path, shape, name=None, seed=None, source=None):
    with open(path, "w") as f:
        f.write(formatDivide(shape, name, seed, source))
