#!/usr/bin/env python3
"""Regenerate the golden CLI reports under tests/golden/.

Run from the repository root after an intentional report-format change:

    python3 scripts/regen_goldens.py

Keep the diff honest: goldens are byte-compared by the test suite.
"""

import contextlib
import io
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from cli_cases import CASES, GOLDEN  # noqa: E402
from ultraspec.cli import main  # noqa: E402


def regenerate() -> None:
    os.environ.pop("ULTRASPEC_SEED", None)
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES:
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = main(argv)
        if code != 0:
            raise SystemExit(f"{name}: exit code {code}")
        (GOLDEN / name).write_text(buffer.getvalue(), encoding="utf-8")
        print(f"wrote {name} ({len(buffer.getvalue())} bytes)")


if __name__ == "__main__":
    regenerate()
