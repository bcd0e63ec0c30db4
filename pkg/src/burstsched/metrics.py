"""Feasibility, rent cost, utilization, makespan, and the scalarized objective.

Everything here is a pure function of an already-built Schedule (plus the
Workload for deadline lookups), so results are reproducible and the same
schedule can be re-audited after a round-trip through serialization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    DanglingAssignment,
    EmptyCatalog,
    EpsilonOutOfRange,
    NotAPm,
    NotAVm,
)
from .model import PM, VM, Container, ObjectiveParams, Schedule, TaskKey, VmType, Workload

# Fixed column order for experiment CSV emission.
CSV_COLUMNS = [
    "algorithm",
    "alpha",
    "pm_scale",
    "tasks",
    "total_rent_cost",
    "makespan",
    "overall_utilization",
    "rented_vms",
    "objective",
    "wall_time_ms",
]


@dataclass(frozen=True)
class Violation:
    task: TaskKey
    finish: Optional[float]  # None when the task never appears in the schedule
    deadline: float
    reason: str  # "deadline" | "duplicate" | "unassigned"


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class MetricsReport:
    feasible: bool
    violations: tuple[Violation, ...]
    rent_costs: dict[int, float]  # container id -> cost, VM containers only
    total_rent_cost: float
    pm_utilizations: dict[int, float]  # container id -> u_k, PM containers only
    overall_utilization: float
    makespan: float
    objective: float

    def to_doc(self) -> dict:
        return {
            "feasible": self.feasible,
            "violations": [
                {
                    "task": list(v.task),
                    "finish": v.finish,
                    "deadline": v.deadline,
                    "reason": v.reason,
                }
                for v in self.violations
            ],
            "rent_costs": {str(k): v for k, v in self.rent_costs.items()},
            "total_rent_cost": self.total_rent_cost,
            "pm_utilizations": {str(k): v for k, v in self.pm_utilizations.items()},
            "overall_utilization": self.overall_utilization,
            "makespan": self.makespan,
            "objective": self.objective,
        }


def check_deadlines(schedule: Schedule, workload: Workload) -> FeasibilityReport:
    """Audit a schedule against its workload.

    Walks each core's assignments in stored start order checking every finish
    against the task deadline, and verifies single assignment: each task in
    the workload appears exactly once.  All violations are collected, not
    just the first.  An assignment naming a task outside the workload raises
    DanglingAssignment.
    """
    tasks = workload.task_map()
    violations: list[Violation] = []
    seen: set[TaskKey] = set()

    per_core: dict[tuple[int, int], list] = {}
    for a in schedule.assignments:
        if a.task not in tasks:
            raise DanglingAssignment(a.task)
        per_core.setdefault((a.container_id, a.core_index), []).append(a)

    for core_key in sorted(per_core):
        for a in sorted(per_core[core_key], key=lambda x: x.start):
            deadline = tasks[a.task].deadline
            if a.task in seen:
                violations.append(Violation(a.task, a.finish, deadline, "duplicate"))
                continue
            seen.add(a.task)
            if a.finish > deadline:
                violations.append(Violation(a.task, a.finish, deadline, "deadline"))

    for key, t in tasks.items():
        if key not in seen:
            violations.append(Violation(key, None, t.deadline, "unassigned"))

    violations.sort(key=lambda v: v.task)
    return FeasibilityReport(feasible=not violations, violations=tuple(violations))


def rent_cost(container: Container) -> float:
    """Billed cost of a rented VM: ceil(longest core busy time / period) * price.

    A rented but unused VM costs nothing (it was never actually started).
    """
    if container.kind != VM:
        raise NotAVm(f"container {container.id} is a {container.kind}")
    busy = container.max_busy
    if busy == 0.0:
        return 0.0
    vm_type = container.spec.vm_type
    periods = math.ceil(busy / vm_type.billing_period)
    return periods * vm_type.price


def _utilization_shape(container: Container) -> float:
    # Work-based: total assigned requirement over core_count times the
    # busiest core's requirement, so core capacity cancels exactly.
    works = [c.work for c in container.cores]
    peak = max(works)
    if peak == 0.0:
        return 0.0
    return sum(works) / (len(works) * peak)


def pm_utilization(container: Container) -> float:
    """Load balance of a PM in [0, 1]; 0 when nothing is assigned to it."""
    if container.kind != PM:
        raise NotAPm(f"container {container.id} is a {container.kind}")
    return _utilization_shape(container)


def overall_utilization(schedule: Schedule) -> float:
    """Unweighted mean utilization over containers with at least one task."""
    used = [c for c in schedule.containers if c.used]
    if not used:
        return 0.0
    return sum(_utilization_shape(c) for c in used) / len(used)


def makespan(schedule: Schedule) -> float:
    return max((a.finish for a in schedule.assignments), default=0.0)


def _check_epsilon(schedule: Schedule, params: ObjectiveParams) -> None:
    if params.epsilon <= 0:
        raise EpsilonOutOfRange(f"epsilon must be positive, got {params.epsilon}")
    if params.pm_count < 1:
        return
    vm_prices = [
        c.spec.vm_type.price for c in schedule.containers if c.kind == VM
    ]
    if vm_prices and params.epsilon >= min(vm_prices) / params.pm_count:
        raise EpsilonOutOfRange(
            f"epsilon {params.epsilon} not below min price / P = "
            f"{min(vm_prices) / params.pm_count}"
        )


def objective_value(schedule: Schedule, params: ObjectiveParams) -> float:
    """Scalar objective: rented-VM cost minus epsilon-weighted PM utilization.

    Negative exactly when everything ran locally on at least one PM; positive
    as soon as one VM is rented, by the bound on epsilon.
    """
    _check_epsilon(schedule, params)
    u_sum = sum(
        _utilization_shape(c) for c in schedule.containers if c.kind == PM
    )
    cost = sum(rent_cost(c) for c in schedule.containers if c.kind == VM)
    return -params.epsilon * u_sum + cost


def default_epsilon(catalog: list[VmType], pm_count: int) -> float:
    """Half the feasible upper bound: 0.5 * min catalog price / pm_count."""
    if not catalog:
        raise EmptyCatalog("cannot derive epsilon from an empty VM catalog")
    if pm_count < 1:
        raise ValueError(f"pm_count must be >= 1, got {pm_count}")
    return 0.5 * min(v.price for v in catalog) / pm_count


def build_report(
    schedule: Schedule, workload: Workload, params: ObjectiveParams
) -> MetricsReport:
    feas = check_deadlines(schedule, workload)
    costs = {c.id: rent_cost(c) for c in schedule.containers if c.kind == VM}
    utils = {c.id: pm_utilization(c) for c in schedule.containers if c.kind == PM}
    return MetricsReport(
        feasible=feas.feasible,
        violations=feas.violations,
        rent_costs=costs,
        total_rent_cost=sum(costs.values()),
        pm_utilizations=utils,
        overall_utilization=overall_utilization(schedule),
        makespan=makespan(schedule),
        objective=objective_value(schedule, params),
    )


def csv_row(
    report: MetricsReport,
    algorithm: str,
    alpha,
    pm_scale,
    tasks: int,
    wall_time_ms: float,
    rented_vms: int,
) -> list:
    return [
        algorithm,
        alpha,
        pm_scale,
        tasks,
        report.total_rent_cost,
        report.makespan,
        report.overall_utilization,
        rented_vms,
        report.objective,
        wall_time_ms,
    ]
