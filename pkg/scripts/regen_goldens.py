#!/usr/bin/env python3
"""Regenerate the golden CLI outputs under cases/golden/.

Every entry of cases/golden_manifest.json is run with --format json and its
output frozen; the test suite replays the same commands and compares bytes.
"""

import json
import sys
from pathlib import Path

from lgforge.cli import main

ROOT = Path(__file__).resolve().parent.parent


def resolve(argv):
    return [str(ROOT / a) if a.startswith("cases/") else a for a in argv]


def run():
    manifest = json.loads((ROOT / "cases" / "golden_manifest.json").read_text())
    outdir = ROOT / "cases" / "golden"
    outdir.mkdir(parents=True, exist_ok=True)
    for entry in manifest:
        target = outdir / f"{entry['name']}.json"
        argv = resolve(entry["argv"]) + ["--format", "json", "--output", str(target)]
        rc = main(argv)
        if rc != 0:
            print(f"FAILED ({rc}): {entry['name']}", file=sys.stderr)
            return rc
        print(f"wrote {target.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
