#!/usr/bin/env python3
"""Regenerate every golden file under tests/golden (same as pytest --bless)."""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", "tests",
                              "--bless", "-q", "-k", "golden"], cwd=ROOT))
