#!/usr/bin/env python3
"""Regenerate the bundled SWF fixtures under data/.

Deterministic: fixed seed, so the committed files are reproducible.
Run from the repository root:  python3 scripts/make_bundled_trace.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

SEED = 20260826
N_JOBS = 1800
PROC_CHOICES = [1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 6, 8]


def swf_line(job: int, submit: int, wait: int, run: float, procs: int) -> str:
    # 18 standard fields; only 1 (job), 4 (run time), 5 (processors) are consumed.
    fields = [job, submit, wait, int(run), procs] + [-1] * 13
    return " ".join(str(f) for f in fields)


def make_main_trace() -> str:
    rng = random.Random(SEED)
    lines = [
        "; SWF trace synthesized for scheduler experiments",
        "; Version: 2.2",
        "; Computer: synthetic heterogeneous cluster",
        "; MaxJobs: %d" % N_JOBS,
        "; UnixStartTime: 0",
        ";",
    ]
    submit = 0
    for job in range(1, N_JOBS + 1):
        submit += rng.randint(1, 120)
        run = round(30 * (3000 / 30) ** rng.random())  # log-uniform 30..3000 s
        procs = rng.choice(PROC_CHOICES)
        lines.append(swf_line(job, submit, rng.randint(0, 60), run, procs))
    return "\n".join(lines) + "\n"


def make_gaia_excerpt() -> tuple[str, dict]:
    rng = random.Random(SEED + 1)
    header = [
        "; UnixStartTime: 1399000000",
        "; TimeZoneString: Europe/Luxembourg",
        "; StartTime: Fri May  2 06:06:40 CEST 2014",
        "; Computer: Gaia-style cluster",
        "; Procs: 2004",
        "; Version: 2.2",
        "; Note: 50-line excerpt for parser verification",
        ";",
        "; Field meanings follow the Standard Workload Format",
        ";",
    ]
    data = []
    dropped = 0
    for job in range(1, 41):
        if job in (7, 19, 23, 31):  # missing run time or processors
            if job in (7, 19):
                data.append(swf_line(job, job * 10, 1, -1, 4))
            elif job == 23:
                data.append(swf_line(job, job * 10, 1, 0, 2))
            else:
                data.append(swf_line(job, job * 10, 1, 500, -1))
            dropped += 1
        else:
            data.append(swf_line(job, job * 10, 1, rng.randint(60, 4000), rng.choice(PROC_CHOICES)))
    manifest = {"data_lines": 40, "retained": 40 - dropped, "dropped": dropped}
    return "\n".join(header + data) + "\n", manifest


def make_nasa_excerpt() -> tuple[str, dict]:
    rng = random.Random(SEED + 2)
    header = [
        "; UnixStartTime: 749458800",
        "; Computer: iPSC/860-style hypercube",
        "; Procs: 128",
        "; MaxRuntime: 62643",
        "; Version: 2",
        "; Note: 50-line excerpt for parser verification",
        ";",
        ";",
    ]
    data = []
    dropped = 0
    for job in range(1, 43):
        if job in (5, 28, 40):
            data.append(swf_line(job, job * 25, 0, -1, -1))
            dropped += 1
        else:
            procs = rng.choice([1, 2, 4, 8, 16, 32])
            data.append(swf_line(job, job * 25, 0, rng.randint(10, 9000), procs))
    manifest = {"data_lines": 42, "retained": 42 - dropped, "dropped": dropped}
    return "\n".join(header + data) + "\n", manifest


def main() -> None:
    DATA.mkdir(exist_ok=True)
    (DATA / "bundled_trace.swf").write_text(make_main_trace(), encoding="utf-8")
    gaia, gaia_manifest = make_gaia_excerpt()
    nasa, nasa_manifest = make_nasa_excerpt()
    (DATA / "gaia_excerpt.swf").write_text(gaia, encoding="utf-8")
    (DATA / "nasa_excerpt.swf").write_text(nasa, encoding="utf-8")
    manifest = {"gaia_excerpt.swf": gaia_manifest, "nasa_excerpt.swf": nasa_manifest}
    (DATA / "excerpt_manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    print("wrote", sorted(p.name for p in DATA.iterdir()))


if __name__ == "__main__":
    main()
