#!/usr/bin/env python3
"""Reproduce the headline sweeps on the bundled trace.

Runs three experiments through the CLI and leaves the CSVs in results/:
  deadline_sweep.csv  - rent cost / makespan as alpha loosens 1..4
  scale_sweep.csv     - rent cost as the local fleet is replicated 1..10x
  growth.csv          - wall time at 1000/2000/4000 tasks

Usage: python3 scripts/run_sweep.py [--outdir results]
"""

import argparse
import json
import sys
import tempfile
from pathlib import Path

from burstsched.cli import main as cli_main

ROOT = Path(__file__).resolve().parent.parent
TRACE = ROOT / "data" / "bundled_trace.swf"

PLANS = {
    "deadline_sweep.csv": {
        "algorithms": ["ha", "ffd"],
        "alphas": [1, 2, 3, 4],
        "task_counts": [1000],
        "repetitions": 3,
    },
    "scale_sweep.csv": {
        "algorithms": ["ha", "ffd"],
        "alphas": [4],
        "pm_scales": list(range(1, 11)),
        "task_counts": [1000],
        "repetitions": 3,
    },
    "growth.csv": {
        "algorithms": ["ha", "ffd"],
        "alphas": [4],
        "task_counts": [1000, 2000, 4000],
        "repetitions": 3,
    },
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default=str(ROOT / "results"))
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    rc = 0
    with tempfile.TemporaryDirectory() as tmp:
        for name, plan in PLANS.items():
            plan_path = Path(tmp) / name.replace(".csv", ".plan.json")
            plan_path.write_text(json.dumps(plan))
            out = outdir / name
            code = cli_main(
                ["experiment", "--plan", str(plan_path), "--trace", str(TRACE),
                 "--out", str(out)]
            )
            rc = rc or code
    return rc


if __name__ == "__main__":
    sys.exit(main())
