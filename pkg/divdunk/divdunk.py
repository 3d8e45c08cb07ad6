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
# Main routine for the divdunk toolkit
#########################################################################
# Imports
#########################################################################
from __future__ import print_function
import sys
import os

from fractions import Fraction

from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter

import pandas  # @UnresolvedImport
from joblib import Parallel, delayed  # @UnresolvedImport

from divdunk.arnold.invariants import jMinus, jPlus, jTilde, strangeness  # @UnresolvedImport
from divdunk.divides.casson import cassonFormula, cassonTerms, closureCombination  # @UnresolvedImport
from divdunk.divides.divide import Divide, closure  # @UnresolvedImport
from divdunk.geometry.diagonal import diagonalize  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve, validate, gaussCode  # @UnresolvedImport
from divdunk.geometry.winding import turningNumber  # @UnresolvedImport
from divdunk.hirasawa.diagram import buildDiagram  # @UnresolvedImport
from divdunk.hirasawa.doubling import double  # @UnresolvedImport
from divdunk.hirasawa.svg import svgText  # @UnresolvedImport
from divdunk.knots.alexander import alexander, alexanderCasson, oracleCasson  # @UnresolvedImport
from divdunk.knots.laurent import cassonFromAlexander  # @UnresolvedImport
from divdunk.knots.pdcode import formatPD, formatGauss, simplify  # @UnresolvedImport
from divdunk.knots.skein import gaussCasson  # @UnresolvedImport
from divdunk.perestroika.chmutov import chmutovDelta  # @UnresolvedImport
from divdunk.perestroika.moves import MoveSite, DIRECT, INVERSE, TRIPLE, applyMove  # @UnresolvedImport
from divdunk.perestroika.sites import findTangencySites, findTriangleSites  # @UnresolvedImport
from divdunk.utils.misc import message, error, debug, stepFinished, dunkFinished, getLogFile, closeLogFile, formatRational, DivdunkError, GeometryError, ParseError  # @UnresolvedImport
from divdunk.utils.DivideReader import CLOSED, parseEntry, readDivide, writeDivide  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.version import __version__  # @UnresolvedImport

########################################################################
# Global variables
########################################################################

verbose = False

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

EQUAL = "equal"
MISMATCH = "MISMATCH"
FAILED = "error"

COLUMNS = ["name", "crossings", "formula", "oracle", "gauss", "status"]

MOVES = {"direct": DIRECT, "inverse": INVERSE, "triple": TRIPLE}

########################################################################
# Routine definitions
########################################################################


def defaultSeed():
    return int(os.environ.get("DIVDUNK_SEED", "0"))


def readShape(path):
    try:
        return readDivide(path)
    except (ParseError, GeometryError, IOError) as e:
        error(path + ": " + str(e), EXIT_INPUT)


def readDivideOnly(path):
    shape = readShape(path)
    if not isinstance(shape, Divide):
        error(path + ": expected a divide, found a closed curve", EXIT_INPUT)
    return shape


def printTable(rows):
    for key, value in rows:
        print(key + "\t" + str(value))


def runValidate(path):
    try:
        with open(path, "r") as f:
            entry = parseEntry(f.read())
    except (ParseError, IOError) as e:
        error(path + ": " + str(e), EXIT_INPUT)
    curve = PLCurve(entry.points, closed=(entry.kind == CLOSED))
    report = validate(curve)
    rows = [("kind", curve.kind), ("points", len(curve.points)), ("double_points", len(report.doublePoints))]
    if report.valid:
        rows.append(("gauss", gaussCode(report)))
    for violation in report.violations:
        rows.append(("violation", violation))
    rows.append(("status", "valid" if report.valid else "invalid"))
    printTable(rows)
    return EXIT_OK if report.valid else EXIT_INPUT


def curveInvariants(curve, prefix=""):
    return [(prefix + "St", strangeness(curve)), (prefix + "J+", jPlus(curve)), (prefix + "J-", jMinus(curve)),
            (prefix + "J~", jTilde(curve)), (prefix + "turning", turningNumber(curve))]


def runInvariants(path):
    shape = readShape(path)
    if isinstance(shape, Divide):
        rows = curveInvariants(closure(shape), "closure.")
        rows += curveInvariants(closure(shape.reversed()), "reversed.")
        rows.append(("(J+ + 2St)/4", formatRational(Fraction(closureCombination(shape), 4))))
    else:
        rows = curveInvariants(shape)
    printTable(rows)
    return EXIT_OK


def runCasson(path):
    divide = readDivideOnly(path)
    terms = cassonTerms(divide)
    for t in terms.vertexTerms:
        print("vertex " + str(t.vertex.id + 1) + "\tJ~ " + str(t.jTilde) + "\tcrossings " + str(t.crossings) + "\t" + formatRational(t.value))
    print("closure\tJ+ " + str(terms.closurePlus) + "\tSt " + str(terms.closureStrangeness) + "\t" + formatRational(terms.closureTerm))
    print("casson\t" + str(terms.total))
    return EXIT_OK


def runDiagram(path, format, stage, reduce, output):
    divide = readDivideOnly(path)
    if format == "svg" and stage == "divide":
        text = svgText(divide)
    elif format == "svg" and stage == "doubled":
        text = svgText(double(diagonalize(divide.curve)))
    else:
        pd = buildDiagram(divide)
        if reduce:
            pd = simplify(pd)
        if format == "pd":
            text = formatPD(pd)
        elif format == "gauss":
            text = formatGauss(pd)
        else:
            text = svgText(pd)
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(output, "w") as f:
            f.write(text)
        message("Wrote " + output)
    return EXIT_OK


def runOracle(path):
    divide = readDivideOnly(path)
    pd = buildDiagram(divide)
    reduced = simplify(pd)
    poly = alexander(pd)
    printTable([("crossings", len(pd)), ("reduced_crossings", len(reduced)), ("alexander", poly),
                ("casson", cassonFromAlexander(poly)), ("casson_jet", alexanderCasson(pd)), ("casson_gauss", gaussCasson(pd))])
    return EXIT_OK


def corruptOracle(pd, reference):
    # Switches the first crossing that changes the oracle value
    for i in range(len(pd)):
        value = oracleCasson(pd.switched(i))
        if value != reference:
            debug("corrupted crossing " + str(i + 1))
            return value
    return reference


def verifyCase(tid, case, debugMode, corrupt, logPath):
    row = dict((c, None) for c in COLUMNS)
    log = getLogFile(logPath)
    try:
        divide = readDivide(case) if isinstance(case, str) else case
        if not isinstance(divide, Divide):
            raise GeometryError("expected a divide, found a closed curve")
        row["name"] = divide.name or ("case" + str(tid + 1))
        row["crossings"] = len(divide.doublePoints)
        row["formula"] = cassonFormula(divide, debug=debugMode)
        pd = buildDiagram(divide)
        row["oracle"] = oracleCasson(pd)
        row["gauss"] = gaussCasson(pd)
        if corrupt:
            row["oracle"] = corruptOracle(pd, row["oracle"])
        row["status"] = EQUAL if row["formula"] == row["oracle"] == row["gauss"] else MISMATCH
    except Exception as e:
        if row["name"] is None:
            row["name"] = case if isinstance(case, str) else "case" + str(tid + 1)
        row["status"] = FAILED
        print(row["name"] + "\t" + type(e).__name__ + ": " + str(e), file=log)
    print(row["name"] + "\t" + row["status"], file=log)
    closeLogFile(log)
    stepFinished()
    return row


def runVerify(args):
    if args.corrupt and not args.debug:
        error("--corrupt needs --debug", EXIT_INPUT)
    if args.random is not None:
        seed = args.seed if args.seed is not None else defaultSeed()
        message("Generating " + str(args.random) + " random divides (seed " + str(seed) + ", at most " + str(args.maxCrossings) + " double points)")
        cases = randomDivides(args.random, args.maxCrossings, seed)
    else:
        cases = args.files
    if not cases:
        error("Nothing to verify: give divide files or --random", EXIT_INPUT)

    message("Running divdunk verify for " + str(len(cases)) + " divides (" + str(args.threads) + " threads)")
    rows = Parallel(n_jobs=args.threads, verbose=verbose)(delayed(verifyCase)(tid, cases[tid], args.debug, args.corrupt, args.log) for tid in range(0, len(cases)))
    dunkFinished()

    summary = pandas.DataFrame(rows, columns=COLUMNS, dtype=object)
    sys.stdout.write(summary.to_csv(sep="\t", index=False, na_rep="NA"))
    equal = int((summary["status"] == EQUAL).sum())
    print("# equal " + str(equal) + "/" + str(len(rows)))
    if equal != len(rows):
        error("divdunk verify: " + str(len(rows) - equal) + " of " + str(len(rows)) + " divides disagree", EXIT_MISMATCH)
    return EXIT_OK


def chooseMove(divide, kind, branches, index):
    if branches is not None:
        receipt = applyMove(divide, MoveSite(kind, branches))
        if receipt.kind != kind:
            raise GeometryError("branches " + ",".join(str(b) for b in branches) + " give a " + receipt.kind + " move")
        return receipt
    if kind == TRIPLE:
        found = findTriangleSites(divide)
    else:
        found = [(s, r) for (s, r) in findTangencySites(divide) if r.kind == kind]
    if len(found) < index:
        raise GeometryError("only " + str(len(found)) + " " + kind + " sites found")
    return found[index - 1][1]


def oracleOf(divide):
    return oracleCasson(buildDiagram(divide))


def runPerestroika(args):
    divide = readDivideOnly(args.file)
    kind = MOVES[args.move]
    branches = None
    if args.branches is not None:
        try:
            branches = [int(b) for b in args.branches.split(",")]
        except ValueError:
            error("--branches takes comma separated segment numbers", EXIT_INPUT)
    try:
        receipt = chooseMove(divide, kind, branches, args.site)
    except GeometryError as e:
        error(args.file + ": " + str(e), EXIT_INPUT)

    moved = receipt.after
    if args.output is not None:
        writeDivide(args.output, moved, source="perestroika " + receipt.moveLog())
        message("Wrote " + args.output)

    predicted = 0 if kind == TRIPLE else chmutovDelta(receipt)
    formulaDelta = cassonFormula(moved) - cassonFormula(divide)
    oracleDelta = oracleOf(moved) - oracleOf(divide)
    before, after = closure(divide), closure(moved)
    printTable([("move", receipt.moveLog()),
                ("delta_St", strangeness(after) - strangeness(before)),
                ("delta_J+", jPlus(after) - jPlus(before)),
                ("delta_J-", jMinus(after) - jMinus(before)),
                ("predicted", predicted), ("formula", formulaDelta), ("oracle", oracleDelta)])
    if not predicted == formulaDelta == oracleDelta:
        error("divdunk perestroika: predicted and measured deltas disagree", EXIT_MISMATCH)
    return EXIT_OK


def run():
    ########################################################################
    # Argument parsing
    ########################################################################

    # Info
    usage = "divdunk: Casson invariants of divide knots, two ways"

    # Main Parsers
    parser = ArgumentParser(description=usage, formatter_class=ArgumentDefaultsHelpFormatter)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)

    # Initialize Subparsers
    subparsers = parser.add_subparsers(help="", dest="command")

    validateparser = subparsers.add_parser('validate', help='Check a divide or closed curve for genericity', formatter_class=ArgumentDefaultsHelpFormatter)
    validateparser.add_argument('file', action='store', help='DivideFile or path text')

    invariantsparser = subparsers.add_parser('invariants', help='Arnold invariants of a closed curve or of a divide closure', formatter_class=ArgumentDefaultsHelpFormatter)
    invariantsparser.add_argument('file', action='store', help='DivideFile or path text')

    cassonparser = subparsers.add_parser('casson', help='Casson invariant from the divide formula', formatter_class=ArgumentDefaultsHelpFormatter)
    cassonparser.add_argument('file', action='store', help='DivideFile or path text')

    diagramparser = subparsers.add_parser('diagram', help='Knot diagram of a divide', formatter_class=ArgumentDefaultsHelpFormatter)
    diagramparser.add_argument('file', action='store', help='DivideFile or path text')
    diagramparser.add_argument("-f", "--format", type=str, required=False, dest="format", default="pd", choices=["pd", "gauss", "svg"], help="Output format")
    diagramparser.add_argument("-st", "--stage", type=str, required=False, dest="stage", default="diagram", choices=["divide", "doubled", "diagram"], help="Construction stage drawn by --format svg")
    diagramparser.add_argument("-s", "--simplify", action='store_true', dest="simplify", help="Remove kinks and bigons before output")
    diagramparser.add_argument("-o", "--output", type=str, required=False, dest="output", default=None, help="Output file (stdout if omitted)")

    oracleparser = subparsers.add_parser('oracle', help='Alexander polynomial and Casson invariant of the divide knot', formatter_class=ArgumentDefaultsHelpFormatter)
    oracleparser.add_argument('file', action='store', help='DivideFile or path text')

    verifyparser = subparsers.add_parser('verify', help='Compare the divide formula against the knot oracles', formatter_class=ArgumentDefaultsHelpFormatter)
    verifyparser.add_argument('files', action='store', help='DivideFiles', nargs="*")
    verifyparser.add_argument("-r", "--random", type=int, required=False, dest="random", default=None, help="Number of random divides to generate instead of reading files")
    verifyparser.add_argument("-k", "--max-crossings", type=int, required=False, dest="maxCrossings", default=8, help="Max. double points of random divides")
    verifyparser.add_argument("--seed", type=int, required=False, dest="seed", default=None, help="Random seed (default: $DIVDUNK_SEED or 0)")
    verifyparser.add_argument("-t", "--threads", type=int, required=False, dest="threads", default=1, help="Thread number")
    verifyparser.add_argument("-l", "--log", type=str, required=False, dest="log", default=None, help="Append per-divide records to this file")
    verifyparser.add_argument("-d", "--debug", action='store_true', dest="debug", help="Also check orientation independence of the formula")
    verifyparser.add_argument("--corrupt", action='store_true', dest="corrupt", help="Corrupt each diagram before the oracle runs (needs --debug)")

    perestroikaparser = subparsers.add_parser('perestroika', help='Apply a perestroika and compare predicted with measured Casson deltas', formatter_class=ArgumentDefaultsHelpFormatter)
    perestroikaparser.add_argument('file', action='store', help='DivideFile or path text')
    perestroikaparser.add_argument("-m", "--move", type=str, required=True, dest="move", choices=sorted(MOVES), help="Kind of move")
    perestroikaparser.add_argument("-b", "--branches", type=str, required=False, dest="branches", default=None, help="Segment numbers i,j (tangency) or i,j,k (triple); searched if omitted")
    perestroikaparser.add_argument("-i", "--site", type=int, required=False, dest="site", default=1, help="Use the i-th site found by the search (1-based)")
    perestroikaparser.add_argument("-o", "--output", type=str, required=False, dest="output", default=None, help="DivideFile for the moved divide")

    args = parser.parse_args()

    ########################################################################
    # Routine selection
    ########################################################################

    command = args.command

    try:
        if (command == "validate"):
            code = runValidate(args.file)
        elif (command == "invariants"):
            code = runInvariants(args.file)
        elif (command == "casson"):
            code = runCasson(args.file)
        elif (command == "diagram"):
            code = runDiagram(args.file, args.format, args.stage, args.simplify, args.output)
        elif (command == "oracle"):
            code = runOracle(args.file)
        elif (command == "verify"):
            code = runVerify(args)
        elif (command == "perestroika"):
            code = runPerestroika(args)
        else:
            parser.error("Too few arguments.")
    except GeometryError as e:
        error("divdunk " + command + ": " + str(e), EXIT_INPUT)
    except DivdunkError as e:
        error("divdunk " + command + ": " + str(e), EXIT_MISMATCH)

    sys.exit(code)


if __name__ == '__main__':
    run()
