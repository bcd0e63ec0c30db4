"""Exhaustive optimality oracle for tiny instances.

Enumerates every assignment of tasks to cores over the PM fleet plus up to
max_vms rented VM instances, sequencing each core by ascending deadline
(job-id tie-break), and returns the feasible assignment minimizing the
scalarized objective.  Symmetric states (interchangeable empty cores of a
container, interchangeable unused instances of one type) are pruned, which
never removes the optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .errors import EpsilonOutOfRange, Infeasible, InstanceTooLarge
from .model import (
    PM,
    VM,
    Assignment,
    Container,
    Core,
    ObjectiveParams,
    PmSpec,
    Schedule,
    Task,
    VmInstanceSpec,
    VmType,
    Workload,
)

DEFAULT_TASK_BOUND = 8
DEFAULT_CORE_BOUND = 6


@dataclass(frozen=True)
class ExactSolution:
    best_assignment: Schedule
    best_objective: float
    explored: int  # complete feasible assignments evaluated


@dataclass
class _SlotCore:
    container_pos: int  # position in the slot container list
    core_index: int
    capacity: float
    busy: float = 0.0
    work: float = 0.0
    count: int = 0


def _validate_epsilon(params: ObjectiveParams, catalog: Sequence[VmType]) -> None:
    if params.epsilon <= 0:
        raise EpsilonOutOfRange(f"epsilon must be positive, got {params.epsilon}")
    if catalog and params.pm_count >= 1:
        bound = min(v.price for v in catalog) / params.pm_count
        if params.epsilon >= bound:
            raise EpsilonOutOfRange(f"epsilon {params.epsilon} >= min price / P = {bound}")


def solve_exact(
    workload: Workload,
    pms: Sequence[PmSpec],
    catalog: Sequence[VmType],
    max_vms: int,
    params: ObjectiveParams,
    task_bound: int = DEFAULT_TASK_BOUND,
    core_bound: int = DEFAULT_CORE_BOUND,
) -> ExactSolution:
    """Brute-force the optimal schedule for a small instance."""
    tasks = sorted(
        workload.all_tasks(), key=lambda t: (t.deadline, t.job_id, t.task_index)
    )
    n = len(tasks)
    if n > task_bound:
        raise InstanceTooLarge(f"{n} tasks exceeds enumeration bound {task_bound}")
    pm_core_total = sum(p.core_count for p in pms)
    vm_core_worst = max_vms * max((v.core_count for v in catalog), default=0)
    if pm_core_total + vm_core_worst > core_bound:
        raise InstanceTooLarge(
            f"{pm_core_total} PM cores + up to {vm_core_worst} VM cores "
            f"exceeds core bound {core_bound}"
        )
    _validate_epsilon(params, catalog if max_vms > 0 else [])

    types = sorted(catalog, key=lambda v: v.type_id)
    if max_vms > 0 and types:
        combos = list(combinations_with_replacement(types, max_vms))
    else:
        combos = [()]

    best_objective: Optional[float] = None
    best_choice: Optional[tuple[tuple[VmType, ...], list[int]]] = None
    explored = 0

    pm_list = sorted(pms, key=lambda p: p.id)

    for combo in combos:
        # Container slots: PMs first, then one slot per prospective instance.
        slot_specs: list[tuple[str, object, int, float]] = [
            (PM, p, p.core_count, p.core_capacity) for p in pm_list
        ]
        for vt in combo:
            slot_specs.append((VM, vt, vt.core_count, vt.core_capacity))
        cores: list[_SlotCore] = []
        container_cores: list[list[_SlotCore]] = []
        for cpos, (_, _, count, cap) in enumerate(slot_specs):
            group = [_SlotCore(cpos, l, cap) for l in range(count)]
            container_cores.append(group)
            cores.extend(group)

        choice = [0] * n

        def leaf():
            nonlocal best_objective, best_choice, explored
            explored += 1
            obj = 0.0
            for cpos, (kind, spec, _, _) in enumerate(slot_specs):
                group = container_cores[cpos]
                peak = max(c.work for c in group)
                if kind == PM:
                    if peak > 0.0:
                        obj -= params.epsilon * (
                            sum(c.work for c in group) / (len(group) * peak)
                        )
                else:
                    busy = max(c.busy for c in group)
                    if busy > 0.0:
                        obj += math.ceil(busy / spec.billing_period) * spec.price
            if best_objective is None or obj < best_objective:
                best_objective = obj
                best_choice = (combo, list(choice))

        def dfs(ti: int):
            if ti == n:
                leaf()
                return
            t = tasks[ti]
            tried_empty: set[int] = set()
            for ci, core in enumerate(cores):
                if core.count == 0:
                    # Empty cores of one container are interchangeable.
                    if core.container_pos in tried_empty:
                        continue
                    tried_empty.add(core.container_pos)
                    # Unused instances of the same type are interchangeable:
                    # only the first unused one may be opened.
                    cpos = core.container_pos
                    if cpos >= len(pm_list):
                        prev = cpos - 1
                        if prev >= len(pm_list) and slot_specs[prev][1] is slot_specs[cpos][1]:
                            if all(c.count == 0 for c in container_cores[prev]):
                                continue
                finish = core.busy + t.requirement / core.capacity
                if finish > t.deadline:
                    continue
                prev_busy = core.busy
                core.busy = finish
                core.work += t.requirement
                core.count += 1
                choice[ti] = ci
                dfs(ti + 1)
                core.busy = prev_busy
                core.work -= t.requirement
                core.count -= 1

        dfs(0)

    if best_objective is None:
        raise Infeasible("no assignment satisfies every deadline")

    schedule = _rebuild(tasks, pm_list, best_choice)
    return ExactSolution(
        best_assignment=schedule, best_objective=best_objective, explored=explored
    )


def _rebuild(
    tasks: Sequence[Task],
    pm_list: Sequence[PmSpec],
    choice: tuple[tuple[VmType, ...], list[int]],
) -> Schedule:
    combo, picks = choice
    slot_specs: list[tuple[str, object, int, float]] = [
        (PM, p, p.core_count, p.core_capacity) for p in pm_list
    ]
    for vt in combo:
        slot_specs.append((VM, vt, vt.core_count, vt.core_capacity))

    # Flat core table mirroring the enumeration order.
    flat: list[tuple[int, int, float]] = []  # (container_pos, core_index, capacity)
    for cpos, (_, _, count, cap) in enumerate(slot_specs):
        for l in range(count):
            flat.append((cpos, l, cap))

    # Assign real container ids: PMs keep theirs, used VM slots get P+1, ...
    used_slots = sorted({flat[ci][0] for ci in picks})
    vm_base = max((p.id for p in pm_list), default=0)
    ids: dict[int, int] = {}
    ordinal = 0
    for cpos, (kind, spec, _, _) in enumerate(slot_specs):
        if kind == PM:
            ids[cpos] = spec.id
        elif cpos in used_slots:
            ordinal += 1
            ids[cpos] = vm_base + ordinal

    busy: dict[tuple[int, int], float] = {}
    core_tasks: dict[tuple[int, int], list] = {}
    core_work: dict[tuple[int, int], float] = {}
    assignments = []
    for ti, ci in enumerate(picks):
        cpos, l, cap = flat[ci]
        t = tasks[ti]
        start = busy.get((cpos, l), 0.0)
        finish = start + t.requirement / cap
        assignments.append(
            Assignment(
                task=t.key,
                container_id=ids[cpos],
                core_index=l,
                start=start,
                finish=finish,
            )
        )
        busy[(cpos, l)] = finish
        core_tasks.setdefault((cpos, l), []).append(t.key)
        core_work[(cpos, l)] = core_work.get((cpos, l), 0.0) + t.requirement

    containers = []
    ordinal = 0
    for cpos, (kind, spec, count, _) in enumerate(slot_specs):
        if kind == VM and cpos not in used_slots:
            continue
        cores = tuple(
            Core(
                tasks=tuple(core_tasks.get((cpos, l), ())),
                busy_until=busy.get((cpos, l), 0.0),
                work=core_work.get((cpos, l), 0.0),
            )
            for l in range(count)
        )
        if kind == PM:
            containers.append(Container(id=ids[cpos], kind=PM, spec=spec, cores=cores))
        else:
            ordinal += 1
            containers.append(
                Container(
                    id=ids[cpos],
                    kind=VM,
                    spec=VmInstanceSpec(vm_type=spec, ordinal=ordinal),
                    cores=cores,
                )
            )
    containers.sort(key=lambda c: c.id)
    rented_used = sum(1 for c in containers if c.kind == VM and c.used)
    return Schedule(
        assignments=tuple(assignments),
        containers=tuple(containers),
        rented_vm_count=rented_used,
    )
