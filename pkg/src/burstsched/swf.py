"""Standard Workload Format ingestion and workload/fleet transforms.

SWF files are line oriented: ';' starts a header or comment line, data
lines carry whitespace-separated fields.  Only job number (field 1), run
time (field 4), and allocated processors (field 5) are consumed; records
with missing run time or processors (-1 markers, zeros) are dropped but
counted.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Union

from .errors import MalformedLine, NotEnoughTasks
from .model import Job, PmSpec, Task, Workload, build_workload

REFERENCE_CAPACITY_GHZ = 1.0  # trace run times are taken on 1 GHz cores
DEADLINE_CAPACITY_GHZ = 2.0  # deadlines scale the run time on a 2 GHz core


@dataclass(frozen=True)
class RawTraceJob:
    job_number: int
    runtime: float  # seconds
    processors: int  # allocated


@dataclass(frozen=True)
class ParseResult:
    jobs: tuple[RawTraceJob, ...]
    dropped: int
    data_lines: int


@dataclass(frozen=True)
class FleetConfig:
    pms: tuple[PmSpec, ...]
    scale_factor: int = 1


def parse_swf(lines: Iterable[str]) -> ParseResult:
    """Parse an SWF text stream into retained raw jobs plus drop accounting."""
    jobs = []
    dropped = 0
    data_lines = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        data_lines += 1
        fields = line.split()
        if len(fields) < 5:
            raise MalformedLine(lineno, line)
        job_number = int(fields[0])
        runtime = float(fields[3])
        processors = int(float(fields[4]))
        if runtime <= 0 or processors < 1:
            dropped += 1
            continue
        jobs.append(RawTraceJob(job_number=job_number, runtime=runtime, processors=processors))
    return ParseResult(jobs=tuple(jobs), dropped=dropped, data_lines=data_lines)


def parse_swf_path(path: Union[str, Path]) -> ParseResult:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_swf(fh)


def to_workload(
    raw: Iterable[RawTraceJob], alpha: int, split_by_processors: bool = True
) -> Workload:
    """Convert raw trace jobs into a deadline-ordered workload.

    Each trace job becomes one Job whose deadline is alpha times its run
    time on a 2 GHz core.  With split_by_processors, the job carries one
    task per allocated processor, each demanding the full run time at the
    1 GHz reference; otherwise a single task per job.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    jobs = []
    for r in raw:
        n_tasks = r.processors if split_by_processors else 1
        deadline = alpha * r.runtime / DEADLINE_CAPACITY_GHZ
        requirement = r.runtime * REFERENCE_CAPACITY_GHZ
        tasks = tuple(
            Task(
                job_id=r.job_number,
                task_index=j + 1,
                requirement=requirement,
                deadline=deadline,
            )
            for j in range(n_tasks)
        )
        jobs.append(Job(id=r.job_number, deadline=deadline, tasks=tasks))
    return build_workload(jobs)


def truncate_tasks(workload: Workload, n: int) -> Workload:
    """Keep the deadline-order prefix holding exactly n tasks."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if workload.total_tasks < n:
        raise NotEnoughTasks(n, workload.total_tasks)
    kept = []
    remaining = n
    for job in workload.jobs:
        if remaining == 0:
            break
        take = min(len(job.tasks), remaining)
        kept.append(replace(job, tasks=job.tasks[:take]))
        remaining -= take
    return Workload(jobs=tuple(kept), total_tasks=n)


def scale_fleet(config: FleetConfig) -> list[PmSpec]:
    """Replicate the base fleet scale_factor times with fresh sequential ids."""
    if config.scale_factor < 1:
        raise ValueError(f"scale_factor must be >= 1, got {config.scale_factor}")
    out = []
    next_id = 1
    for _ in range(config.scale_factor):
        for pm in config.pms:
            out.append(replace(pm, id=next_id))
            next_id += 1
    return out
