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

import os
import sys

from fractions import Fraction

import pytest  # @UnresolvedImport

from divdunk import divdunk, splash  # @UnresolvedImport
from divdunk.divides.divide import Divide  # @UnresolvedImport
from divdunk.divides.standard import figureEight, standardDivide  # @UnresolvedImport
from divdunk.geometry.plcurve import PLCurve  # @UnresolvedImport
from divdunk.utils.DivideReader import HEADER, parseDivide, parseEntry, formatDivide, readDivide, writeDivide  # @UnresolvedImport
from divdunk.utils.generator import randomDivides  # @UnresolvedImport
from divdunk.utils.misc import ParseError, formatRational, parseRational  # @UnresolvedImport
from divdunk.version import __divide_version__  # @UnresolvedImport


def runCli(monkeypatch, module, *argv):
    monkeypatch.setattr(sys, "argv", [module.__name__.split(".")[-1]] + list(argv))
    with pytest.raises(SystemExit) as exit:
        module.run()
    return exit.value.code


def writeFile(directory, name, text):
    path = os.path.join(str(directory), name)
    with open(path, "w") as f:
        f.write(text)
    return path


def test_rationals():
    assert parseRational("3/4") == Fraction(3, 4)
    assert parseRational("-0.25") == Fraction(-1, 4)
    assert parseRational(" 7 ") == 7
    assert formatRational(Fraction(6, 4)) == "3/2"
    assert formatRational(Fraction(4, 2)) == "2"
    with pytest.raises(ValueError):
        parseRational("1/2/3")


def test_path_chord():
    divide = parseDivide("S -1 0 L 1 0 E")
    assert isinstance(divide, Divide)
    assert list(divide.curve.points) == [(-1, 0), (1, 0)]
    assert len(divide.doublePoints) == 0


def test_path_endpoints_are_snapped():
    divide = parseDivide("S -2 0 L 0.5 1/4 L 3 0 E")
    assert list(divide.curve.points) == [(-1, 0), (Fraction(1, 2), Fraction(1, 4)), (1, 0)]


def test_path_endpoint_at_the_centre():
    with pytest.raises(ParseError) as e:
        parseEntry("S 0 0 L 1/2 1/2 E")
    assert "centre" in e.value.msg
    assert (e.value.line, e.value.column) == (1, 1)
    with pytest.raises(ParseError) as e:
        parseEntry("S -1 0 L 1/2 1/2 L 0 0 E")
    assert e.value.column == 18


def test_path_errors():
    with pytest.raises(ParseError) as e:
        parseEntry("S -1 0 L 0 0 L 0 0 E")
    assert e.value.msg == "degenerate segment"
    assert (e.value.line, e.value.column) == (1, 14)

    with pytest.raises(ParseError) as e:
        parseEntry("S -1 0 L 1 0")
    assert "terminator" in e.value.msg

    with pytest.raises(ParseError) as e:
        parseEntry("S -1 0 M 1 0 E")
    assert e.value.column == 8

    with pytest.raises(ParseError):
        parseEntry("S -1 0 L 1 0 E L 0 1")


def test_divide_file_errors():
    with pytest.raises(ParseError) as e:
        parseEntry("kind divide\n-1 0\n1 0\n")
    assert e.value.line == 1

    with pytest.raises(ParseError) as e:
        parseEntry("#divdunk divide 9\n-1 0\n1 0\n")
    assert "version" in e.value.msg

    with pytest.raises(ParseError) as e:
        parseEntry(HEADER + " " + __divide_version__ + "\nkind divide\n-1 0\n1/0 0\n")
    assert (e.value.line, e.value.column) == (4, 1)

    with pytest.raises(ParseError) as e:
        parseEntry(HEADER + " " + __divide_version__ + "\nkind open\n")
    assert e.value.line == 2


def test_divide_file_format():
    text = formatDivide(standardDivide(1), seed=5, source="test")
    lines = text.splitlines()
    assert lines[0] == HEADER + " " + __divide_version__
    assert lines[1:4] == ["#name D1", "#seed 5", "#source test"]
    assert lines[4] == "kind divide"
    assert lines[5] == "-1 0"
    assert text.endswith("1 0\n")


def test_divide_file_reread(tmp_path):
    for shape in (standardDivide(3), figureEight()):
        path = os.path.join(str(tmp_path), "shape.divide")
        writeDivide(path, shape, name="shape")
        again = readDivide(path)
        curve = shape.curve if isinstance(shape, Divide) else shape
        assert type(again) is type(shape)
        againCurve = again.curve if isinstance(again, Divide) else again
        assert againCurve.points == curve.points
        assert againCurve.closed == curve.closed


def test_reader_names_divides_after_their_file(tmp_path):
    path = writeFile(tmp_path, "chord.divide", "S -1 0 L 0 1/2 L 1 0 E\n")
    assert readDivide(path).name == path


def test_generator_is_seed_deterministic():
    first = randomDivides(5, 6, seed=4)
    second = randomDivides(5, 6, seed=4)
    other = randomDivides(5, 6, seed=5)
    assert [d.curve.points for d in first] == [d.curve.points for d in second]
    assert [d.curve.points for d in first] != [d.curve.points for d in other]
    assert [d.name for d in first] == ["random-4-" + str(k) for k in range(5)]


def test_generated_divides_are_proper():
    divides = randomDivides(20, 6, seed=9)
    for divide in divides:
        assert len(divide.doublePoints) <= 6
        for (x, y) in (divide.curve.points[0], divide.curve.points[-1]):
            assert x * x + y * y == 1
    assert any(len(d.doublePoints) > 0 for d in divides)


def test_generator_reaches_the_crossing_budget():
    divides = randomDivides(40, 8, seed=2026)
    counts = [len(d.doublePoints) for d in divides]
    assert max(counts) <= 8
    assert any(5 <= c <= 8 for c in counts)
    assert counts.count(0) < len(counts) // 2


def test_cli_casson(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "D1.divide")
    writeDivide(path, standardDivide(1))
    assert runCli(monkeypatch, divdunk, "casson", path) == 0
    out = capsys.readouterr().out
    assert "casson\t1\n" in out
    assert out.startswith("vertex 1\t")


def test_cli_rejects_bad_input(monkeypatch, capsys, tmp_path):
    garbage = writeFile(tmp_path, "garbage.divide", "S -1 0 L 1 E\n")
    assert runCli(monkeypatch, divdunk, "casson", garbage) == 2

    closed = os.path.join(str(tmp_path), "K0.divide")
    writeDivide(closed, figureEight())
    assert runCli(monkeypatch, divdunk, "casson", closed) == 2
    assert runCli(monkeypatch, divdunk, "oracle", closed) == 2

    touching = writeFile(tmp_path, "touching.divide", HEADER + " " + __divide_version__ + "\nkind closed\n0 0\n4 0\n4 2\n2 0\n0 2\n")
    capsys.readouterr()
    assert runCli(monkeypatch, divdunk, "validate", touching) == 2
    out = capsys.readouterr().out
    assert "status\tinvalid" in out
    assert "violation\t" in out


def test_cli_invariants_of_a_closed_curve(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "K0.divide")
    writeDivide(path, figureEight())
    assert runCli(monkeypatch, divdunk, "invariants", path) == 0
    out = capsys.readouterr().out
    assert "St\t0\n" in out
    assert "turning\t0\n" in out


def test_cli_oracle(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "D2.divide")
    writeDivide(path, standardDivide(2))
    assert runCli(monkeypatch, divdunk, "oracle", path) == 0
    rows = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert rows["casson"] == rows["casson_jet"] == rows["casson_gauss"] == "2"
    assert int(rows["reduced_crossings"]) <= int(rows["crossings"])


def test_cli_diagram_is_deterministic(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "D2.divide")
    writeDivide(path, standardDivide(2))
    texts = []
    for argv in (["diagram", path], ["diagram", path], ["diagram", "-f", "svg", path], ["diagram", "-f", "svg", path]):
        assert runCli(monkeypatch, divdunk, *argv) == 0
        texts.append(capsys.readouterr().out)
    assert texts[0] == texts[1]
    assert texts[0].startswith("X[")
    assert texts[2] == texts[3]
    assert "<svg" in texts[2]

    output = os.path.join(str(tmp_path), "D2.gauss")
    assert runCli(monkeypatch, divdunk, "diagram", "-f", "gauss", "-s", "-o", output, path) == 0
    assert os.path.exists(output)


def test_cli_verify_files(monkeypatch, capsys, tmp_path):
    splash.standardCorpus(str(tmp_path), 3, 1)
    paths = [os.path.join(str(tmp_path), "D" + str(n) + ".divide") for n in range(4)]
    assert runCli(monkeypatch, divdunk, "verify", *paths) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "\t".join(divdunk.COLUMNS)
    assert lines[-1] == "# equal 4/4"
    assert lines[2].split("\t") == ["D1", "1", "1", "1", "1", "equal"]


def test_cli_verify_random_is_reproducible(monkeypatch, capsys):
    outputs = []
    assert runCli(monkeypatch, divdunk, "verify", "--random", "6", "-k", "4", "--seed", "7") == 0
    outputs.append(capsys.readouterr().out)
    assert runCli(monkeypatch, divdunk, "verify", "--random", "6", "-k", "4", "--seed", "7") == 0
    outputs.append(capsys.readouterr().out)
    monkeypatch.setenv("DIVDUNK_SEED", "7")
    assert runCli(monkeypatch, divdunk, "verify", "--random", "6", "-k", "4") == 0
    outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]
    assert outputs[0].splitlines()[-1] == "# equal 6/6"


def test_cli_verify_catches_a_corrupted_oracle(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "D1.divide")
    writeDivide(path, standardDivide(1))
    assert runCli(monkeypatch, divdunk, "verify", "--corrupt", path) == 2
    assert runCli(monkeypatch, divdunk, "verify", "--debug", "--corrupt", path) == 1
    out = capsys.readouterr().out
    assert "MISMATCH" in out
    assert out.splitlines()[-1] == "# equal 0/1"


def test_cli_verify_reports_broken_files(monkeypatch, capsys, tmp_path):
    good = os.path.join(str(tmp_path), "D0.divide")
    writeDivide(good, standardDivide(0))
    broken = writeFile(tmp_path, "broken.divide", "not a divide\n")
    log = os.path.join(str(tmp_path), "verify.log")
    assert runCli(monkeypatch, divdunk, "verify", "-l", log, good, broken) == 1
    out = capsys.readouterr().out
    assert "\terror\n" in out
    with open(log) as f:
        assert "ParseError" in f.read()


def test_cli_centre_endpoint_is_an_input_error(monkeypatch, capsys, tmp_path):
    centre = writeFile(tmp_path, "centre.divide", "S 0 0 L 1/2 1/2 E\n")
    assert runCli(monkeypatch, divdunk, "casson", centre) == 2
    good = os.path.join(str(tmp_path), "D0.divide")
    writeDivide(good, standardDivide(0))
    capsys.readouterr()
    assert runCli(monkeypatch, divdunk, "verify", centre, good) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split("\t")[-1] == "error"
    assert lines[2].split("\t") == ["D0", "0", "0", "0", "0", "equal"]
    assert lines[-1] == "# equal 1/2"


def test_cli_verify_survives_unexpected_failures(monkeypatch, capsys, tmp_path):
    paths = []
    for n in range(2):
        paths.append(os.path.join(str(tmp_path), "D" + str(n) + ".divide"))
        writeDivide(paths[-1], standardDivide(n))

    def broken(divide, debug=False):
        if divide.doublePoints:
            raise ZeroDivisionError("broken formula")
        return 0

    monkeypatch.setattr(divdunk, "cassonFormula", broken)
    log = os.path.join(str(tmp_path), "verify.log")
    assert runCli(monkeypatch, divdunk, "verify", "-l", log, *paths) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split("\t")[-1] == "equal"
    assert lines[2].split("\t")[-1] == "error"
    with open(log) as f:
        assert "ZeroDivisionError" in f.read()


def test_cli_perestroika(monkeypatch, capsys, tmp_path):
    path = os.path.join(str(tmp_path), "D1.divide")
    writeDivide(path, standardDivide(1))
    output = os.path.join(str(tmp_path), "moved.divide")
    assert runCli(monkeypatch, divdunk, "perestroika", "-m", "direct", "-o", output, path) == 0
    rows = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert rows["delta_J+"] == "2"
    assert rows["predicted"] == rows["formula"] == rows["oracle"]
    moved = readDivide(output)
    assert len(moved.doublePoints) == 1 + 2

    assert runCli(monkeypatch, divdunk, "perestroika", "-m", "direct", "-b", "a,b", path) == 2


def test_splash_standard(monkeypatch, tmp_path):
    monkeypatch.setattr(sys, "argv", ["splash", "standard", "-n", "2", "-w", "2", "-o", str(tmp_path)])
    splash.run()
    names = sorted(os.listdir(str(tmp_path)))
    assert names == sorted(["D0.divide", "D1.divide", "D2.divide", "interleaved3.divide", "K0.divide", "K1.divide", "K2.divide", "K3.divide"])
    assert isinstance(readDivide(os.path.join(str(tmp_path), "K2.divide")), PLCurve)
    assert len(readDivide(os.path.join(str(tmp_path), "D2.divide")).doublePoints) == 2


def test_splash_random_is_reproducible(monkeypatch, tmp_path):
    contents = []
    for directory in ("a", "b"):
        target = os.path.join(str(tmp_path), directory)
        monkeypatch.setattr(sys, "argv", ["splash", "random", "-n", "4", "-k", "5", "-s", "3", "-o", target])
        splash.run()
        files = sorted(os.listdir(target))
        contents.append([open(os.path.join(target, name)).read() for name in files])
    assert contents[0] == contents[1]
    assert len(contents[0]) == 4
    assert contents[0][0].splitlines()[2] == "#seed 3"
