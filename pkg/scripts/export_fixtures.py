#!/usr/bin/env python3
"""Write the bundled scenario fixtures as JSON files.

The files feed the CLI examples in the README:

    python3 scripts/export_fixtures.py [DIRECTORY]

Default directory: ./fixtures
"""
from __future__ import annotations

import sys

from hohfeld.scenarios import export_fixture_files


def main() -> None:
    directory = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for path in export_fixture_files(directory):
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
