"""First Fit Decreasing baseline with deadline-feasible placement.

Tasks are sorted by requirement descending and each is placed on the first
core, scanning PMs by descending total capacity and then rented VMs in
rental order, whose current backlog still lets the task finish by its
deadline.  When no open core fits, a fresh VM is rented for the task using
the same type-selection rule as the greedy scheduler, restricted to that
one task.  Nothing is ever retired: every opened core stays a candidate.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .errors import UnschedulableTask, VmCapExceeded
from .ha import PoolCore, _screen_unschedulable, select_vm_type
from .model import (
    PM,
    VM,
    Assignment,
    Container,
    PmSpec,
    Schedule,
    VmInstanceSpec,
    VmType,
    Workload,
)


class _CoreArrays:
    """Flat append-only view of all open cores with numpy first-fit scans."""

    def __init__(self):
        self.cores: list[PoolCore] = []
        self._cap = np.empty(64)
        self._busy = np.empty(64)

    def append(self, core: PoolCore) -> None:
        n = len(self.cores)
        if n == self._cap.size:
            self._cap = np.concatenate([self._cap, np.empty(self._cap.size)])
            self._busy = np.concatenate([self._busy, np.empty(self._busy.size)])
        self._cap[n] = core.capacity
        self._busy[n] = core.busy_until
        self.cores.append(core)

    def first_fit(self, requirement: float, deadline: float) -> Optional[int]:
        """Scan position of the first deadline-feasible core, or None."""
        n = len(self.cores)
        if n == 0:
            return None
        ok = self._busy[:n] + requirement / self._cap[:n] <= deadline
        if not ok.any():
            return None
        return int(np.argmax(ok))

    def advance(self, pos: int, finish: float) -> None:
        self._busy[pos] = finish


def schedule_ffd(
    workload: Workload,
    pms: Sequence[PmSpec],
    catalog: Sequence[VmType],
    vm_cap: Optional[int] = None,
) -> Schedule:
    """Run the FFD baseline over a whole workload."""
    tasks = sorted(
        workload.all_tasks(), key=lambda t: (-t.requirement, t.job_id, t.task_index)
    )
    _screen_unschedulable(tasks, pms, catalog)

    arrays = _CoreArrays()
    containers: dict[int, tuple[str, object, list[PoolCore]]] = {}

    def open_container(cid: int, kind: str, spec, core_count: int, capacity: float):
        cores = [PoolCore(cid, l, capacity) for l in range(core_count)]
        containers[cid] = (kind, spec, cores)
        for c in cores:
            arrays.append(c)

    for pm in sorted(pms, key=lambda p: (-p.capacity_product, p.id)):
        open_container(pm.id, PM, pm, pm.core_count, pm.core_capacity)

    vm_id_base = max((p.id for p in pms), default=0)
    rented = 0
    assignments: list[Assignment] = []

    for t in tasks:
        pos = arrays.first_fit(t.requirement, t.deadline)
        if pos is None:
            if vm_cap is not None and rented >= vm_cap:
                raise VmCapExceeded(vm_cap)
            if not catalog:
                raise UnschedulableTask([t.key], "no open core fits and no VM catalog")
            vm_type = select_vm_type([t], catalog)
            rented += 1
            cid = vm_id_base + rented
            spec = VmInstanceSpec(vm_type=vm_type, ordinal=rented)
            open_container(cid, VM, spec, vm_type.core_count, vm_type.core_capacity)
            pos = arrays.first_fit(t.requirement, t.deadline)
            assert pos is not None  # guaranteed by the type's single-task check
        core = arrays.cores[pos]
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
        arrays.advance(pos, finish)

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
