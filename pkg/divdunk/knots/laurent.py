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
# Integer Laurent polynomials in one variable t
#########################################################################

import re

from divdunk.utils.misc import OracleError, ParseError  # @UnresolvedImport

_TERM = re.compile(r"^\s*(-?\d+)\*t\^(-?\d+)\s*$")


class LaurentPoly:
    """Sparse map exponent -> coefficient with no zero coefficients stored."""

    def __init__(self, coefficients=None):
        self.coefficients = {}
        if coefficients:
            for e, c in coefficients.items():
                if c != 0:
                    self.coefficients[int(e)] = int(c)

    @classmethod
    def one(cls):
        return cls({0: 1})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.coefficients.items())))

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        result = dict(self.coefficients)
        for e, c in other.coefficients.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        result = {}
        for e1, c1 in self.coefficients.items():
            for e2, c2 in other.coefficients.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    def __pow__(self, n):
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k):
        return LaurentPoly({e + k: c for e, c in self.coefficients.items()})

    def minDegree(self):
        return min(self.coefficients) if self.coefficients else 0

    def maxDegree(self):
        return max(self.coefficients) if self.coefficients else 0

    def atOne(self):
        return sum(self.coefficients.values())

    def isSymmetric(self):
        return all(self.coefficients.get(-e) == c for e, c in self.coefficients.items())

    def isNormalized(self):
        return self.isSymmetric() and self.atOne() == 1

    def normalized(self):
        """Returns +-t^k * self with symmetric exponent range and value 1 at t = 1."""
        if not self.coefficients:
            raise OracleError("cannot normalize the zero polynomial")
        span = self.minDegree() + self.maxDegree()
        if span % 2 != 0:
            raise OracleError("exponent range of " + str(self) + " cannot be centred")
        p = self.shift(-span // 2)
        value = p.atOne()
        if value not in (1, -1):
            raise OracleError("polynomial " + str(self) + " has value " + str(value) + " at t = 1")
        if value == -1:
            p = -p
        if not p.isSymmetric():
            raise OracleError("polynomial " + str(self) + " is not symmetric")
        return p

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(str(self.coefficients[e]) + "*t^" + str(e) for e in sorted(self.coefficients))

    def __repr__(self):
        return "LaurentPoly(" + str(self) + ")"


def parsePolynomial(text):
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    coefficients = {}
    column = 1
    for term in text.split(" + "):
        m = _TERM.match(term)
        if m is None:
            raise ParseError("malformed polynomial term '" + term.strip() + "'", line=1, column=column)
        e = int(m.group(2))
        coefficients[e] = coefficients.get(e, 0) + int(m.group(1))
        column += len(term) + 3
    return LaurentPoly(coefficients)


def cassonFromAlexander(poly):
    """Half the second derivative at t = 1 of a normalized Alexander polynomial."""
    if not poly.isNormalized():
        raise OracleError("Alexander polynomial " + str(poly) + " is not normalized")
    # for symmetric p: p''(1) = sum c_e e(e-1) = sum c_e e^2
    total = sum(c * e * e for e, c in poly.coefficients.items())
    if total % 2 != 0:
        raise OracleError("odd second derivative for " + str(poly))
    return total // 2
