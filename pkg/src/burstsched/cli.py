"""Command-line driver: trace ingestion, single runs, sweeps, and the oracle.

Exit codes: 0 success, 2 validation error, 3 infeasible/unschedulable,
4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import exact, ffd, ha, metrics, serial, swf
from .config import (
    ExperimentPlan,
    default_run_config,
    load_plan,
    load_run_config,
)
from .errors import (
    EmptyWorkload,
    EpsilonOutOfRange,
    Infeasible,
    InstanceTooLarge,
    InvalidJob,
    MalformedLine,
    NotEnoughTasks,
    SchedulingError,
    UnschedulableTask,
    VmCapExceeded,
)
from .model import ObjectiveParams
from .swf import FleetConfig

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4

_VALIDATION_ERRORS = (
    EmptyWorkload,
    InvalidJob,
    MalformedLine,
    NotEnoughTasks,
    EpsilonOutOfRange,
    InstanceTooLarge,
    ValueError,
)
_INFEASIBLE_ERRORS = (UnschedulableTask, VmCapExceeded, Infeasible)

SCHEDULERS = {"ha": ha.schedule_ha, "ffd": ffd.schedule_ffd}


def _write_json(path: str, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _load_workload(path: str):
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return serial.workload_from_doc(doc)


def _resolve_config(args):
    cfg = load_run_config(args.config) if args.config else default_run_config()
    if getattr(args, "pm_scale", None):
        cfg = replace(cfg, fleet=FleetConfig(pms=cfg.fleet.pms, scale_factor=args.pm_scale))
    if getattr(args, "vm_cap", None) is not None:
        cfg = replace(cfg, vm_cap=args.vm_cap)
    if getattr(args, "epsilon", None) is not None:
        cfg = replace(cfg, epsilon=args.epsilon)
    return cfg


def _params(cfg, pms):
    eps = cfg.epsilon
    if eps is None:
        eps = metrics.default_epsilon(list(cfg.catalog), len(pms))
    return ObjectiveParams(epsilon=eps, pm_count=len(pms))


def cmd_ingest(args) -> int:
    result = swf.parse_swf_path(args.trace)
    workload = swf.to_workload(
        result.jobs, args.alpha, split_by_processors=not args.per_job
    )
    if args.tasks:
        workload = swf.truncate_tasks(workload, args.tasks)
    _write_json(args.out, serial.workload_to_doc(workload))
    print(
        f"retained {len(result.jobs)} jobs, dropped {result.dropped} of "
        f"{result.data_lines} data lines; {workload.total_tasks} tasks -> {args.out}"
    )
    return EXIT_OK


def cmd_schedule(args) -> int:
    workload = _load_workload(args.workload)
    cfg = _resolve_config(args)
    pms = swf.scale_fleet(cfg.fleet)
    params = _params(cfg, pms)
    schedule = SCHEDULERS[args.algorithm](workload, pms, list(cfg.catalog), cfg.vm_cap)
    report = metrics.build_report(schedule, workload, params)
    if not report.feasible:
        # Internal invariant: emitted schedules always verify.
        print(f"internal error: emitted schedule violates deadlines: "
              f"{report.violations[:5]}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _write_json(args.out, serial.schedule_to_doc(schedule))
    metrics_path = args.out + ".metrics.json"
    _write_json(metrics_path, report.to_doc())
    print(
        f"{args.algorithm}: {workload.total_tasks} tasks, "
        f"rent={report.total_rent_cost:.4f} makespan={report.makespan:.2f} "
        f"util={report.overall_utilization:.4f} vms={schedule.rented_vm_count} "
        f"objective={report.objective:.6f} -> {args.out}, {metrics_path}"
    )
    return EXIT_OK


def _run_cell(algorithm, workload, pms, catalog, vm_cap, repetitions):
    fn = SCHEDULERS[algorithm]
    times = []
    schedule = None
    for _ in range(repetitions):
        t0 = time.monotonic()
        schedule = fn(workload, pms, catalog, vm_cap)
        times.append((time.monotonic() - t0) * 1000.0)
    return schedule, statistics.median(times)


def cmd_experiment(args) -> int:
    plan = load_plan(args.plan)
    cfg = _resolve_config(args)
    parsed = swf.parse_swf_path(args.trace)
    rows = []
    failures = 0
    for algorithm in plan.algorithms:
        for alpha in plan.alphas:
            base_workload = swf.to_workload(parsed.jobs, alpha)
            for task_count in plan.task_counts or (None,):
                workload = (
                    swf.truncate_tasks(base_workload, task_count)
                    if task_count
                    else base_workload
                )
                for scale in plan.pm_scales:
                    pms = swf.scale_fleet(
                        FleetConfig(pms=cfg.fleet.pms, scale_factor=scale)
                    )
                    try:
                        schedule, ms = _run_cell(
                            algorithm, workload, pms, list(cfg.catalog),
                            cfg.vm_cap, plan.repetitions,
                        )
                        report = metrics.build_report(
                            schedule, workload, _params(cfg, pms)
                        )
                        rows.append(
                            metrics.csv_row(
                                report, algorithm, alpha, scale,
                                workload.total_tasks, ms, schedule.rented_vm_count,
                            )
                            + [""]
                        )
                    except SchedulingError as exc:
                        failures += 1
                        rows.append(
                            [algorithm, alpha, scale, workload.total_tasks]
                            + [""] * 6
                            + [type(exc).__name__]
                        )
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(metrics.CSV_COLUMNS + ["error"])
        writer.writerows(rows)
    print(f"{len(rows)} runs ({failures} failed) -> {args.out}")
    return EXIT_OK if failures == 0 else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    workload = _load_workload(args.workload)
    cfg = _resolve_config(args)
    pms = swf.scale_fleet(cfg.fleet)
    params = _params(cfg, pms)
    solution = exact.solve_exact(
        workload, pms, list(cfg.catalog), args.max_vms, params
    )
    doc = {
        "best_objective": solution.best_objective,
        "explored": solution.explored,
        "best_assignment": serial.schedule_to_doc(solution.best_assignment),
    }
    for algorithm in ("ha", "ffd"):
        try:
            schedule = SCHEDULERS[algorithm](workload, pms, list(cfg.catalog), cfg.vm_cap)
            obj = metrics.objective_value(schedule, params)
            doc[f"{algorithm}_objective"] = obj
            doc[f"{algorithm}_gap"] = obj - solution.best_objective
        except SchedulingError as exc:
            doc[f"{algorithm}_objective"] = None
            doc[f"{algorithm}_error"] = type(exc).__name__
    _write_json(args.out, doc)
    print(
        f"optimal objective {solution.best_objective:.6f} "
        f"({solution.explored} assignments evaluated); "
        f"ha gap {doc.get('ha_gap')}, ffd gap {doc.get('ffd_gap')} -> {args.out}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstsched",
        description="Deadline-constrained bag-of-tasks scheduling on a hybrid cloud",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="convert an SWF trace to a workload document")
    p.add_argument("trace")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--tasks", type=int, default=None, help="truncate to N tasks")
    p.add_argument("--per-job", action="store_true",
                   help="one task per trace job instead of one per processor")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("schedule", help="run one scheduler over a workload document")
    p.add_argument("workload")
    p.add_argument("--algorithm", choices=sorted(SCHEDULERS), required=True)
    p.add_argument("--config", default=None)
    p.add_argument("--pm-scale", type=int, default=None)
    p.add_argument("--vm-cap", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_schedule)

    p = sub.add_parser("experiment", help="run a sweep plan over a trace, emit CSV")
    p.add_argument("--plan", required=True)
    p.add_argument("--trace", required=True)
    p.add_argument("--config", default=None)
    p.add_argument("--vm-cap", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("oracle", help="brute-force optimum on a tiny workload")
    p.add_argument("workload")
    p.add_argument("--config", default=None)
    p.add_argument("--max-vms", type=int, default=2)
    p.add_argument("--pm-scale", type=int, default=None)
    p.add_argument("--vm-cap", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _INFEASIBLE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
