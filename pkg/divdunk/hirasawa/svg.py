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
# SVG drawings of divides, doubled strands and knot diagrams
#########################################################################

import math

import svgwrite  # @UnresolvedImport

from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.hirasawa.doubling import DoubledDivide, CONNECTOR  # @UnresolvedImport
from divdunk.knots.pdcode import PDCode  # @UnresolvedImport
from divdunk.utils.misc import GeometryError  # @UnresolvedImport

SCALE = 50
HALF = 300
GAP = 5
COLORS = {1: "black", -1: "steelblue"}


def _xy(point):
    return (round(float(point[0]) * SCALE, 3), round(-float(point[1]) * SCALE, 3))


def _drawing(path):
    return svgwrite.Drawing(path, size=(2 * HALF, 2 * HALF), viewBox=" ".join(str(v) for v in (-HALF, -HALF, 2 * HALF, 2 * HALF)))


def _drawDivide(drawing, divide):
    points = [_xy(p) for p in divide.curve.points]
    d = "M " + " L ".join(str(x) + " " + str(y) for (x, y) in points)
    drawing.add(drawing.path(d=d).fill("none").stroke("black", width=2, linecap="round"))


def _drawPieces(drawing, pieces):
    for piece in pieces:
        line = drawing.add(svgwrite.shapes.Line(start=_xy(piece.start), end=_xy(piece.end)))
        color = "gray" if piece.kind == CONNECTOR else COLORS[piece.side]
        line.stroke(color, width=2, linecap="round")


def _drawCrossings(drawing, layout):
    for crossing in layout.crossings:
        over = layout.pieces[crossing.over]
        (x, y) = _xy(crossing.point)
        (x0, y0), (x1, y1) = _xy(over.start), _xy(over.end)
        length = math.hypot(x1 - x0, y1 - y0)
        dx, dy = GAP * (x1 - x0) / length, GAP * (y1 - y0) / length
        a = (round(x - dx, 3), round(y - dy, 3))
        b = (round(x + dx, 3), round(y + dy, 3))
        gap = drawing.add(svgwrite.shapes.Line(start=a, end=b, class_="gap"))
        gap.stroke("white", width=7, linecap="butt")
        line = drawing.add(svgwrite.shapes.Line(start=a, end=b))
        line.stroke(COLORS[over.side], width=2, linecap="round")


def renderSvg(stage, path="diagram.svg"):
    drawing = _drawing(path)
    if isinstance(stage, Divide):
        _drawDivide(drawing, stage)
    elif isinstance(stage, DoubledDivide):
        _drawPieces(drawing, stage.pieces)
    elif isinstance(stage, PDCode):
        if stage.layout is None:
            raise GeometryError("diagram has no layout to draw")
        _drawPieces(drawing, stage.layout.pieces)
        _drawCrossings(drawing, stage.layout)
    else:
        raise TypeError("cannot draw " + type(stage).__name__)
    return drawing


def exportSvg(stage, path):
    renderSvg(stage, path).save()


def svgText(stage):
    return renderSvg(stage).tostring()
