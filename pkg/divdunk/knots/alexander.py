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
# Alexander polynomial of a knot diagram by multi-modular elimination
#########################################################################

import numpy as np  # @UnresolvedImport

from divdunk.knots.laurent import LaurentPoly, cassonFromAlexander  # @UnresolvedImport
from divdunk.knots.pdcode import simplify  # @UnresolvedImport
from divdunk.utils.misc import OracleError  # @UnresolvedImport

# Products of two residues must fit into int64
PRIME_LIMIT = 2 ** 31
PRIME_COUNT = 2

_primes = []


def _isPrime(n):
    # Miller-Rabin with these bases is exact below 4759123141
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 61):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 7, 61):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def modularPrimes():
    if not _primes:
        n = PRIME_LIMIT - 1
        while len(_primes) < PRIME_COUNT:
            if _isPrime(n):
                _primes.append(n)
            n -= 2
    return list(_primes)


def _lift(x, p):
    x %= p
    return x - p if x > p // 2 else x


def alexanderMatrix(pd):
    """Wirtinger relation matrix with last row and column removed, as C0 + t*C1."""
    parent = {}

    def find(l):
        parent.setdefault(l, l)
        while parent[l] != l:
            l = parent[l]
        return l

    for i in range(len(pd)):
        ra, rb = find(pd.overIn(i)), find(pd.overOut(i))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    arcs = sorted(set(find(l) for l in pd.labels()))
    column = {a: k for k, a in enumerate(arcs)}
    n = len(pd)
    if len(arcs) != n:
        raise OracleError("expected " + str(n) + " Wirtinger arcs, found " + str(len(arcs)))

    c0 = np.zeros((n, n), dtype=np.int64)
    c1 = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        o = column[find(pd.overIn(i))]
        uIn = column[find(pd.underIn(i))]
        uOut = column[find(pd.underOut(i))]
        c0[i, o] += 1
        c1[i, o] -= 1
        if pd.signs[i] > 0:
            c1[i, uIn] += 1
            c0[i, uOut] -= 1
        else:
            c0[i, uIn] -= 1
            c1[i, uOut] += 1
    return c0[:-1, :-1], c1[:-1, :-1]


def _eliminate(m, p, rhs=None):
    """Gauss-Jordan mod p; returns (det m, m^-1 rhs)."""
    m = m % p
    n = m.shape[0]
    if rhs is not None:
        m = np.concatenate([m, rhs % p], axis=1)
    det = 1
    for k in range(n):
        nonzero = np.nonzero(m[k:, k])[0]
        if len(nonzero) == 0:
            return 0, None
        r = k + nonzero[0]
        if r != k:
            m[[k, r]] = m[[r, k]]
            det = -det
        pivot = int(m[k, k])
        det = det * pivot % p
        m[k] = m[k] * pow(pivot, p - 2, p) % p
        if rhs is None:
            rows = slice(k + 1, n)
        else:
            rows = np.array([j for j in range(n) if j != k], dtype=np.int64)
        factors = m[rows, k].copy()
        m[rows] = (m[rows] - (factors[:, None] * m[k]) % p) % p
    return det % p, (m[:, n:] if rhs is not None else None)


def _jet(c0, c1, p):
    """Sign of det M(1), trace of A and of A^2 for A = M(1)^-1 C1, all mod p."""
    det, a = _eliminate(c0 + c1, p, c1)
    if det not in (1, p - 1):
        raise OracleError("Alexander matrix is not unimodular at t = 1")
    trace = int(np.trace(a) % p)
    trace2 = int(((a * a.T) % p).sum() % p)
    return (1 if det == 1 else -1), trace, trace2


def _newton(xs, ys, p):
    """Interpolating polynomial mod p, coefficients lowest degree first."""
    c = list(ys)
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) * pow(xs[i] - xs[i - j], p - 2, p) % p
    poly = [c[m - 1]]
    for i in range(m - 2, -1, -1):
        shifted = [0] + poly
        for k in range(len(poly)):
            shifted[k] = (shifted[k] - xs[i] * poly[k]) % p
        shifted[0] = (shifted[0] + c[i]) % p
        poly = shifted
    return poly


def _alexanderModP(c0, c1, p):
    sign, trace, _ = _jet(c0, c1, p)
    shift = _lift(trace, p)
    size = c0.shape[0]
    count = size // 2 + 1
    xs = []
    ys = []
    for t in range(2, 2 + count):
        det, _ = _eliminate(c0 + t * c1, p)
        tInv = pow(t, p - 2, p)
        xs.append((t + tInv) % p)
        ys.append(sign * det * pow(t, (-shift) % (p - 1), p) % p)
    g = _newton(xs, ys, p)

    # expand sum g_j (t + 1/t)^j
    coefficients = {}
    binomial = [1]
    for j, gj in enumerate(g):
        if j > 0:
            binomial = [1] + [binomial[k] + binomial[k + 1] for k in range(len(binomial) - 1)] + [1]
        for k, b in enumerate(binomial):
            e = j - 2 * k
            coefficients[e] = (coefficients.get(e, 0) + gj * b) % p
    return LaurentPoly({e: _lift(c, p) for e, c in coefficients.items()})


def _checkKnot(pd):
    if pd.componentCount() != 1:
        raise OracleError("Alexander oracle needs a knot, got " + str(pd.componentCount()) + " components")


def alexander(pd):
    """Normalized Alexander polynomial of a one-component diagram."""
    _checkKnot(pd)
    pd = simplify(pd)
    if len(pd) <= 1:
        return LaurentPoly.one()
    c0, c1 = alexanderMatrix(pd)
    results = [_alexanderModP(c0, c1, p) for p in modularPrimes()]
    if any(r != results[0] for r in results[1:]):
        raise OracleError("modular Alexander computations disagree")
    return results[0].normalized()


def alexanderCasson(pd):
    """Casson invariant straight from the second-order expansion of det M(t) at t = 1."""
    _checkKnot(pd)
    pd = simplify(pd)
    if len(pd) <= 1:
        return 0
    c0, c1 = alexanderMatrix(pd)
    values = set()
    for p in modularPrimes():
        _, trace, trace2 = _jet(c0, c1, p)
        values.add(_lift((trace - trace2) * pow(2, p - 2, p), p))
    if len(values) != 1:
        raise OracleError("modular Casson computations disagree")
    return values.pop()


def oracleCasson(pd):
    return cassonFromAlexander(alexander(pd))
