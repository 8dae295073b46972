#!/usr/bin/env python3
"""Regenerate the CLI golden files.  Run from the repository root:

    python3 tests/goldens/regenerate.py

Inspect the diff before committing: goldens pin the CLI's byte-level
output contract.
"""

from __future__ import annotations

import contextlib
import io
import sys
from pathlib import Path

GOLDEN_DIR = Path(__file__).parent


def main() -> int:
    sys.path.insert(0, str(GOLDEN_DIR.parent))
    from test_acceptance import GOLDEN_CASES

    from jrainbow.cli import main as cli_main

    for golden_name, argv in GOLDEN_CASES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = cli_main(argv)
        if rc != 0:
            print(f"command {argv} exited {rc}", file=sys.stderr)
            return 1
        (GOLDEN_DIR / golden_name).write_text(buf.getvalue())
        print(f"wrote {golden_name} ({len(buf.getvalue())} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
