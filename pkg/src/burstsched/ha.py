"""Greedy minimum-slack scheduler for deadline-constrained bags of tasks.

The loop keeps a pool of open cores belonging to the most recently added
machine.  While any (task, core) pair can meet its deadline, the pair with
the least slack is committed (ties favor the larger task).  When nothing
fits, the whole pool is retired for good and the next machine is opened:
first local PMs by descending total capacity, then rented VMs chosen by
cost-performance ratio among the types able to run every remaining task
alone within its deadline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    EmptyCatalog,
    NoFeasibleVmType,
    NoPmAvailable,
    UnschedulableTask,
    VmCapExceeded,
)
from .model import (
    PM,
    VM,
    Assignment,
    Container,
    Core,
    PmSpec,
    Schedule,
    Task,
    TaskKey,
    VmInstanceSpec,
    VmType,
    Workload,
)


@dataclass
class PoolCore:
    """Mutable per-core scheduling state; frozen into Core at the end."""

    container_id: int
    core_index: int
    capacity: float
    busy_until: float = 0.0
    work: float = 0.0
    tasks: list[TaskKey] = field(default_factory=list)

    def freeze(self) -> Core:
        return Core(tasks=tuple(self.tasks), busy_until=self.busy_until, work=self.work)


def select_pm(available: Iterable[PmSpec]) -> PmSpec:
    """The available PM with the largest core_count * core_capacity, lowest id on ties."""
    pms = list(available)
    if not pms:
        raise NoPmAvailable("no PM left to add")
    return min(pms, key=lambda p: (-p.capacity_product, p.id))


def select_vm_type(unassigned: Sequence[Task], catalog: Sequence[VmType]) -> VmType:
    """Pick the type to rent for the remaining tasks.

    Candidates must be able to finish every unassigned task alone within its
    deadline; among those, highest cost-performance ratio wins, then lowest
    price, then lowest type_id.
    """
    if not catalog:
        raise EmptyCatalog("VM catalog is empty")
    feasible = [
        v
        for v in catalog
        if all(t.requirement / v.core_capacity <= t.deadline for t in unassigned)
    ]
    if not feasible:
        best_cap = max(v.core_capacity for v in catalog)
        offenders = [
            t.key for t in unassigned if t.requirement / best_cap > t.deadline
        ]
        raise NoFeasibleVmType(offenders, "no VM type can run every remaining task")
    return min(feasible, key=lambda v: (-v.cost_performance, v.price, v.type_id))


def select_assignment(
    unassigned: Sequence[Task], pool: Sequence[PoolCore]
) -> Optional[tuple[Task, PoolCore]]:
    """The deadline-feasible (task, core) pair with minimal slack, or None.

    Ties go to the larger requirement, then lowest (job_id, task_index),
    then lowest (container_id, core_index).  This is a convenience wrapper
    over the array kernel used by schedule_ha; it does not mutate the pool.
    """
    tasks = sorted(unassigned, key=lambda t: t.key)
    if not tasks or not pool:
        return None
    req = np.array([t.requirement for t in tasks])
    dl = np.array([t.deadline for t in tasks])
    active = np.ones(len(tasks), dtype=bool)
    cores = sorted(pool, key=lambda c: (c.container_id, c.core_index))
    hit = _best_pair(req, dl, active, cores)
    if hit is None:
        return None
    tpos, core = hit
    return tasks[tpos], core


def _best_pair(req, dl, active, cores: Sequence[PoolCore]):
    """Array kernel behind select_assignment.

    Tasks must be pre-sorted by (job_id, task_index) and cores by
    (container_id, core_index) so positional order encodes the tie-breaks.
    """
    best_key = None
    best = None
    for cpos, core in enumerate(cores):
        slack = dl - (core.busy_until + req / core.capacity)
        ok = active & (slack >= 0.0)
        idx = np.nonzero(ok)[0]
        if idx.size == 0:
            continue
        s = slack[idx]
        m = s.min()
        cand = idx[s == m]
        # argmax returns the first maximum, i.e. the lowest task key.
        tpos = int(cand[int(np.argmax(req[cand]))])
        key = (m, -req[tpos], tpos, cpos)
        if best_key is None or key < best_key:
            best_key = key
            best = (tpos, core)
    return best


def _screen_unschedulable(tasks: Sequence[Task], pms, catalog) -> None:
    max_pm = max((p.core_capacity for p in pms), default=0.0)
    max_vm = max((v.core_capacity for v in catalog), default=0.0)
    offenders = []
    for t in tasks:
        fits_pm = max_pm > 0 and t.requirement / max_pm <= t.deadline
        fits_vm = max_vm > 0 and t.requirement / max_vm <= t.deadline
        if not fits_pm and not fits_vm:
            offenders.append(t.key)
    if offenders:
        raise UnschedulableTask(
            offenders, f"{len(offenders)} task(s) cannot meet their deadline on any core"
        )


def schedule_ha(
    workload: Workload,
    pms: Sequence[PmSpec],
    catalog: Sequence[VmType],
    vm_cap: Optional[int] = None,
) -> Schedule:
    """Run the greedy minimum-slack scheduler over a whole workload."""
    tasks = sorted(workload.all_tasks(), key=lambda t: t.key)
    _screen_unschedulable(tasks, pms, catalog)

    req = np.array([t.requirement for t in tasks])
    dl = np.array([t.deadline for t in tasks])
    active = np.ones(len(tasks), dtype=bool)
    n_active = len(tasks)

    available_pms = list(pms)
    vm_id_base = max((p.id for p in pms), default=0)
    rented = 0

    # container id -> (kind, spec, [PoolCore, ...]); cores persist after
    # pool retirement so final busy/work state is preserved.
    containers: dict[int, tuple[str, object, list[PoolCore]]] = {}
    pool: list[PoolCore] = []
    assignments: list[Assignment] = []

    def open_container(cid: int, kind: str, spec, core_count: int, capacity: float):
        cores = [PoolCore(cid, l, capacity) for l in range(core_count)]
        containers[cid] = (kind, spec, cores)
        pool.extend(cores)

    while n_active:
        if not pool:
            if available_pms:
                pm = select_pm(available_pms)
                available_pms.remove(pm)
                open_container(pm.id, PM, pm, pm.core_count, pm.core_capacity)
            else:
                if vm_cap is not None and rented >= vm_cap:
                    raise VmCapExceeded(vm_cap)
                remaining = [tasks[i] for i in np.nonzero(active)[0]]
                if not catalog:
                    raise UnschedulableTask(
                        [t.key for t in remaining],
                        "local fleet exhausted and no VM catalog configured",
                    )
                vm_type = select_vm_type(remaining, catalog)
                rented += 1
                cid = vm_id_base + rented
                spec = VmInstanceSpec(vm_type=vm_type, ordinal=rented)
                open_container(cid, VM, spec, vm_type.core_count, vm_type.core_capacity)
            continue

        hit = _best_pair(req, dl, active, pool)
        if hit is None:
            pool.clear()  # permanent retirement; cores never rejoin
            continue
        tpos, core = hit
        t = tasks[tpos]
        start = core.busy_until
        finish = start + t.requirement / core.capacity
        assignments.append(
            Assignment(
                task=t.key,
                container_id=core.container_id,
                core_index=core.core_index,
                start=start,
                finish=finish,
            )
        )
        core.busy_until = finish
        core.work += t.requirement
        core.tasks.append(t.key)
        active[tpos] = False
        n_active -= 1

    frozen = tuple(
        Container(
            id=cid,
            kind=kind,
            spec=spec,
            cores=tuple(c.freeze() for c in cores),
        )
        for cid, (kind, spec, cores) in sorted(containers.items())
    )
    rented_used = sum(1 for c in frozen if c.kind == VM and c.used)
    return Schedule(
        assignments=tuple(assignments),
        containers=frozen,
        rented_vm_count=rented_used,
    )
