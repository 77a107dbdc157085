#!/usr/bin/env python3
"""Run the full check suite from a source checkout.

Arguments pass through to the `suite` subcommand, e.g.:

    python3 scripts/run_suite.py --seed 7 --report out/report.json
"""

import sys

from pqcent.cli import main

if __name__ == "__main__":
    sys.exit(main(["suite", *sys.argv[1:]]))
