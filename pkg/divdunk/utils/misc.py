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

from __future__ import print_function
import sys
import os

from fractions import Fraction

########################################################################
# Global variables
########################################################################

verbose = False

mainOutput = sys.stderr

logToMainOutput = False

########################################################################
# Exceptions
########################################################################


class DivdunkError(RuntimeError):
    pass


class GeometryError(DivdunkError):
    pass


class OracleError(DivdunkError):
    pass


class ParseError(ValueError):

    def __init__(self, msg, line=0, column=0):
        self.msg = msg
        self.line = line
        self.column = column
        ValueError.__init__(self, "line " + str(line) + ", column " + str(column) + ": " + msg)

########################################################################
# Logging
########################################################################


def message(msg):
    print(msg, file=mainOutput)


def debug(msg):
    if(verbose):
        print(msg, file=mainOutput)


def error(msg, code=-1):
    print(msg, file=mainOutput)
    sys.exit(code)


def stepFinished():
    print(".", end="", file=mainOutput)


def dunkFinished():
    print("", file=mainOutput)


def getLogFile(path):
    if(logToMainOutput or path is None):
        return mainOutput
    else:
        log = open(path, "a")
        return log


def closeLogFile(log):
    if(log is not mainOutput):
        log.close()

########################################################################
# Files
########################################################################


def createDir(directory):
    if not os.path.exists(directory):
        message("Creating output directory: " + directory)
        os.makedirs(directory)

########################################################################
# Rational numbers
########################################################################


def parseRational(text):
    # Accepts integers, p/q literals and decimals, always exactly
    text = text.strip()
    if(text.count("/") > 1 or text.endswith("/") or text.startswith("/")):
        raise ValueError("Invalid rational literal: " + text)
    return Fraction(text)


def formatRational(value):
    value = Fraction(value)
    if(value.denominator == 1):
        return str(value.numerator)
    return str(value.numerator) + "/" + str(value.denominator)


def formatPoint(point):
    return formatRational(point[0]) + " " + formatRational(point[1])