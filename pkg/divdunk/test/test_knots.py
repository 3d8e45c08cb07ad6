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

import pytest  # @UnresolvedImport
from hypothesis import assume, given, settings  # @UnresolvedImport
from hypothesis import strategies as st  # @UnresolvedImport

from divdunk.knots.alexander import alexander, alexanderCasson, oracleCasson, modularPrimes  # @UnresolvedImport
from divdunk.knots.braids import braidClosure  # @UnresolvedImport
from divdunk.knots.laurent import LaurentPoly, parsePolynomial, cassonFromAlexander  # @UnresolvedImport
from divdunk.knots.pdcode import PDCode, parsePD, formatPD, formatGauss, simplify, findKink  # @UnresolvedImport
from divdunk.knots.skein import gaussCasson, linkingNumber, skeinTriples, applyChange, CrossingChange, SWITCH, SMOOTH  # @UnresolvedImport
from divdunk.utils.misc import OracleError, ParseError  # @UnresolvedImport

TREFOIL = "X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]\n"
FIGURE_EIGHT = "X[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,4]\nX[2,7,3,8]\n"
HOPF = "X[1,3,2,4]\nX[3,1,4,2]\n"

TREFOIL_POLY = LaurentPoly({-1: 1, 0: -1, 1: 1})
FIGURE_EIGHT_POLY = LaurentPoly({-1: -1, 0: 3, 1: -1})


def test_primes_are_large_and_distinct():
    primes = modularPrimes()
    assert len(primes) == 2
    assert primes[0] != primes[1]
    assert all(2 ** 30 < p < 2 ** 31 for p in primes)


def test_laurent_arithmetic():
    t = LaurentPoly({1: 1})
    assert (t - LaurentPoly.one()) * (t + LaurentPoly.one()) == LaurentPoly({2: 1, 0: -1})
    assert TREFOIL_POLY.isNormalized()
    assert TREFOIL_POLY.shift(3).normalized() == TREFOIL_POLY
    assert (-TREFOIL_POLY).normalized() == TREFOIL_POLY
    with pytest.raises(OracleError):
        LaurentPoly({0: 2}).normalized()


def test_polynomial_text():
    assert str(TREFOIL_POLY) == "1*t^-1 + -1*t^0 + 1*t^1"
    assert parsePolynomial(str(FIGURE_EIGHT_POLY)) == FIGURE_EIGHT_POLY
    assert str(LaurentPoly()) == "0"
    with pytest.raises(ParseError):
        parsePolynomial("t^2 + 1")


def test_casson_from_alexander():
    assert cassonFromAlexander(LaurentPoly.one()) == 0
    assert cassonFromAlexander(TREFOIL_POLY) == 1
    assert cassonFromAlexander(FIGURE_EIGHT_POLY) == -1
    assert cassonFromAlexander(TREFOIL_POLY ** 2) == 2
    with pytest.raises(OracleError):
        cassonFromAlexander(TREFOIL_POLY.shift(1))


def test_trefoil():
    pd = parsePD(TREFOIL)
    assert len(pd) == 3
    assert pd.signs == [-1, -1, -1]
    assert pd.componentCount() == 1
    assert alexander(pd) == TREFOIL_POLY
    assert oracleCasson(pd) == 1
    assert alexanderCasson(pd) == 1
    assert gaussCasson(pd) == 1


def test_mirror_keeps_casson():
    pd = parsePD(TREFOIL).mirror()
    assert pd.signs == [1, 1, 1]
    assert alexander(pd) == TREFOIL_POLY
    assert gaussCasson(pd) == 1


def test_figure_eight():
    pd = parsePD(FIGURE_EIGHT)
    assert pd.writhe() == 0
    assert alexander(pd) == FIGURE_EIGHT_POLY
    assert oracleCasson(pd) == -1
    assert alexanderCasson(pd) == -1
    assert gaussCasson(pd) == -1


def test_hopf_link():
    pd = parsePD(HOPF)
    assert pd.signs == [1, 1]
    assert pd.componentCount() == 2
    assert linkingNumber(pd) == 1
    with pytest.raises(OracleError):
        alexander(pd)


def test_kink():
    pd = PDCode([(1, 2, 2, 1)])
    assert pd.signs == [-1]
    assert findKink(pd) == 0
    smoothed = pd.smoothed(0)
    assert len(smoothed) == 0
    assert smoothed.loops == 2
    assert linkingNumber(smoothed) == 0
    reduced = simplify(pd)
    assert len(reduced) == 0
    assert reduced.componentCount() == 1
    assert oracleCasson(pd) == 0


def test_pd_text():
    pd = parsePD(TREFOIL)
    assert parsePD(formatPD(pd)) == pd
    assert formatPD(pd).splitlines()[0] == "X[1,4,2,5] # -1"
    assert formatGauss(parsePD(HOPF)).count("\n") == 2
    with pytest.raises(ParseError) as info:
        parsePD("X[1,4,2,5]\nY[3,6,4,1]\n")
    assert info.value.line == 2
    with pytest.raises(OracleError):
        parsePD("X[1,2,3,4]\n")


def test_crossing_changes():
    pd = parsePD(TREFOIL)
    switched = applyChange(pd, CrossingChange(0, SWITCH))
    assert switched.signs[0] == 1
    assert oracleCasson(switched) == 0
    smoothed = applyChange(pd, CrossingChange(0, SMOOTH))
    assert smoothed.componentCount() == 2
    with pytest.raises(OracleError):
        applyChange(pd, CrossingChange(5, SWITCH))
    with pytest.raises(ValueError):
        CrossingChange(0, "flip")


@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
def test_skein_relation(text):
    pd = parsePD(text)
    for i, positive, negative, smoothed in skeinTriples(pd):
        assert positive.signs[i] == 1
        assert negative.signs[i] == -1
        assert alexanderCasson(positive) - alexanderCasson(negative) == linkingNumber(smoothed)


def test_simplify_keeps_the_knot():
    pd = parsePD(FIGURE_EIGHT)
    assert simplify(pd) == pd
    # trefoil with an extra kink spliced into arc 6
    kinked = PDCode([(1, 4, 2, 5), (3, 7, 4, 1), (5, 2, 6, 3), (6, 7, 8, 8)])
    assert len(simplify(kinked)) == 3
    assert alexander(kinked) == TREFOIL_POLY


def invariants(pd):
    return alexander(pd), alexanderCasson(pd), gaussCasson(pd)


def test_braid_closures():
    trefoil = braidClosure([1, 1, 1])
    assert len(trefoil) == 3
    assert trefoil.signs == [1, 1, 1]
    assert trefoil.componentCount() == 1
    assert invariants(trefoil) == (TREFOIL_POLY, 1, 1)
    eight = braidClosure([1, -2, 1, -2])
    assert eight.writhe() == 0
    assert invariants(eight) == (FIGURE_EIGHT_POLY, -1, -1)
    assert braidClosure([1], strands=3).componentCount() == 2
    with pytest.raises(OracleError):
        braidClosure([3], strands=3)


def test_stabilization_is_invisible():
    for extra in (3, -3):
        pd = braidClosure([1, -2, 1, -2, extra])
        assert len(pd) == 5
        assert invariants(pd) == (FIGURE_EIGHT_POLY, -1, -1)


def test_braid_relation_is_invisible():
    # sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 applied to the first three letters
    before = braidClosure([1, 2, 1, 1])
    after = braidClosure([2, 1, 2, 1])
    assert before.componentCount() == after.componentCount() == 1
    assert before != after
    assert invariants(before) == invariants(after) == (TREFOIL_POLY, 1, 1)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=7), st.integers(min_value=0, max_value=7), st.sampled_from([1, -1, 2, -2]))
def test_cancelling_pair_is_invisible(word, at, g):
    pd = braidClosure(word, strands=3)
    assume(pd.componentCount() == 1)
    at = min(at, len(word))
    longer = braidClosure(word[:at] + [g, -g] + word[at:], strands=3)
    assert len(longer) == len(pd) + 2
    assert invariants(longer) == invariants(pd)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=7), st.integers(min_value=0, max_value=7))
def test_triangle_move_is_invisible(word, at):
    pd = braidClosure(word, strands=3)
    assume(pd.componentCount() == 1)
    at = min(at, len(word))
    # sigma1 sigma2 sigma1 (sigma2 sigma1 sigma2)^-1 is the trivial braid
    longer = braidClosure(word[:at] + [1, 2, 1, -2, -1, -2] + word[at:], strands=3)
    assert longer.componentCount() == 1
    assert invariants(longer) == invariants(pd)
