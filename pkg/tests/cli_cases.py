"""Golden CLI cases shared by the test suite and the regeneration script."""

from pathlib import Path

DATA = Path(__file__).resolve().parent / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


def _data(name: str) -> str:
    return str(DATA / name)


#: (golden file name, argv)
CASES = [
    ("gelfand.txt", ["gelfand", "--input", _data("gelfand.json")]),
    ("gelfand.json", ["gelfand", "--input", _data("gelfand.json"),
                      "--format", "json"]),
    ("inverse_gelfand.txt", ["inverse-gelfand", "--input",
                             _data("inverse_gelfand.json")]),
    ("measure.txt", ["measure", "--input", _data("measure.json"),
                     "--dim", "4"]),
    ("integrate.txt", ["integrate", "--input", _data("integrate.json"),
                       "--dim", "4"]),
    ("integrate.json", ["integrate", "--input", _data("integrate.json"),
                        "--dim", "4", "--format", "json"]),
    ("scalar_integrate.txt", ["scalar-integrate", "--input",
                              _data("scalar_integrate.json")]),
    ("matrix.txt", ["matrix", "--input", _data("matrix.json"),
                    "--dim", "3"]),
    ("resolvent.txt", ["resolvent", "--input", _data("resolvent.json"),
                       "--prec", "6"]),
    ("spectrum.txt", ["spectrum", "--input", _data("spectrum.json")]),
    ("membership.txt", ["membership", "--input", _data("membership.json")]),
    ("membership_violation.txt", ["membership", "--input",
                                  _data("membership_violation.json")]),
    ("classify.txt", ["classify", "--input", _data("classify.json")]),
    ("decompose.txt", ["decompose", "--input", _data("decompose.json")]),
    ("family_example.txt", ["matrix", "--input",
                            _data("family_example.json"), "--dim", "3"]),
    ("verify.txt", ["verify"]),
]
