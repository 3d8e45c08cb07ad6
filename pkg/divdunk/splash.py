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

#SPLASH:

#Seeded Production of LAttice And Standard divides for divdunk cHecks


#########################################################################
# Main routine for the divdunk corpus generator
#########################################################################
# Imports
#########################################################################

from __future__ import print_function
import os

from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter

from joblib import Parallel, delayed  # @UnresolvedImport

from divdunk.divides.standard import figureEight, standardCurve, standardDivide, threeChordDivide  # @UnresolvedImport
from divdunk.utils.DivideReader import writeDivide  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.utils.misc import message, error, createDir, stepFinished, dunkFinished, GeometryError  # @UnresolvedImport
from divdunk.version import __version__  # @UnresolvedImport

########################################################################
# Global variables
########################################################################

verbose = False

########################################################################
# Routine definitions
########################################################################


def writeShape(outputDirectory, name, shape, seed=None, source=None):
    path = os.path.join(outputDirectory, name + ".divide")
    writeDivide(path, shape, name=name, seed=seed, source=source)
    stepFinished()
    return path


def randomCorpus(outputDirectory, count, maxCrossings, seed, maxSteps, threads):
    createDir(outputDirectory)
    message("Generating " + str(count) + " random divides (seed " + str(seed) + ")")
    divides = randomDivides(count, maxCrossings, seed, maxSteps)
    paths = Parallel(n_jobs=threads, verbose=verbose)(delayed(writeShape)(outputDirectory, d.name, d, seed, "splash random") for d in divides)
    dunkFinished()
    return paths


def standardCorpus(outputDirectory, maxDivide, maxOmega):
    createDir(outputDirectory)
    message("Writing D_0..D_" + str(maxDivide) + " and K_0..K_" + str(maxOmega + 1))
    paths = []
    for n in range(0, maxDivide + 1):
        paths.append(writeShape(outputDirectory, "D" + str(n), standardDivide(n), source="splash standard"))
    paths.append(writeShape(outputDirectory, "interleaved3", threeChordDivide(), source="splash standard"))
    paths.append(writeShape(outputDirectory, "K0", figureEight(), source="splash standard"))
    for omega in range(0, maxOmega + 1):
        paths.append(writeShape(outputDirectory, "K" + str(omega + 1), standardCurve(omega), source="splash standard"))
    dunkFinished()
    return paths


def run():
    ########################################################################
    # Argument parsing
    ########################################################################

    # Info
    usage = "splash: reproducible divide corpora for divdunk"

    # Main Parsers
    parser = ArgumentParser(description=usage, formatter_class=ArgumentDefaultsHelpFormatter)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)

    # Initialize Subparsers
    subparsers = parser.add_subparsers(help="", dest="command")

    randomparse = subparsers.add_parser('random', help='Seeded random divides on a diagonal lattice', formatter_class=ArgumentDefaultsHelpFormatter)
    randomparse.add_argument("-n", "--number", type=int, required=False, default=200, dest="number", help="Number of divides")
    randomparse.add_argument("-k", "--max-crossings", type=int, required=False, default=8, dest="maxCrossings", help="Max. double points per divide")
    randomparse.add_argument("-l", "--max-steps", type=int, required=False, default=14, dest="maxSteps", help="Max. lattice steps per walk")
    randomparse.add_argument("-s", "--seed", type=int, required=False, default=None, dest="seed", help="Random seed (default: $DIVDUNK_SEED or 0)")
    randomparse.add_argument("-o", "--outputDir", type=str, required=False, dest="outputDir", default=".", help="Output directory for divide files")
    randomparse.add_argument("-t", "--threads", type=int, required=False, default=1, dest="threads", help="Thread number")

    standardparse = subparsers.add_parser('standard', help='Standard divides D_n and standard curves K_i', formatter_class=ArgumentDefaultsHelpFormatter)
    standardparse.add_argument("-n", "--max-divide", type=int, required=False, default=6, dest="maxDivide", help="Write D_0..D_n")
    standardparse.add_argument("-w", "--max-omega", type=int, required=False, default=6, dest="maxOmega", help="Write K_1..K_{w+1} besides K_0")
    standardparse.add_argument("-o", "--outputDir", type=str, required=False, dest="outputDir", default=".", help="Output directory for divide files")

    args = parser.parse_args()

    ########################################################################
    # Routine selection
    ########################################################################

    command = args.command

    try:
        if (command == "random"):
            seed = args.seed if args.seed is not None else int(os.environ.get("DIVDUNK_SEED", "0"))
            randomCorpus(args.outputDir, args.number, args.maxCrossings, seed, args.maxSteps, args.threads)
        elif (command == "standard"):
            standardCorpus(args.outputDir, args.maxDivide, args.maxOmega)
        else:
            parser.error("Too few arguments.")
    except GeometryError as e:
        error("splash " + command + ": " + str(e), 2)


if __name__ == '__main__':
    run()
