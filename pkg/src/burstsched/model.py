"""Domain entities: jobs, tasks, machines, and schedules.

All types are frozen dataclasses; schedulers build them through private
mutable state and freeze the result.  Times are seconds from a common
origin at 0, work requirements are GHz-seconds on a 1 GHz reference core.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .errors import EmptyWorkload, InvalidJob, ZeroCapacity

TaskKey = tuple[int, int]  # (job_id, task_index)


@dataclass(frozen=True)
class Task:
    job_id: int
    task_index: int
    requirement: float  # GHz-seconds
    deadline: float  # seconds, mirrors the owning job's deadline

    @property
    def key(self) -> TaskKey:
        return (self.job_id, self.task_index)


@dataclass(frozen=True)
class Job:
    id: int
    deadline: float
    tasks: tuple[Task, ...]


@dataclass(frozen=True)
class Workload:
    jobs: tuple[Job, ...]  # sorted by (deadline, id)
    total_tasks: int

    def all_tasks(self) -> list[Task]:
        return [t for job in self.jobs for t in job.tasks]

    def task_map(self) -> dict[TaskKey, Task]:
        return {t.key: t for job in self.jobs for t in job.tasks}


@dataclass(frozen=True)
class PmSpec:
    id: int
    core_count: int
    core_capacity: float  # GHz

    @property
    def capacity_product(self) -> float:
        return self.core_count * self.core_capacity


@dataclass(frozen=True)
class VmType:
    type_id: str
    core_count: int
    core_capacity: float  # GHz
    price: float  # currency per billing period
    billing_period: float = 3600.0  # seconds

    @property
    def cost_performance(self) -> float:
        return self.core_count * self.core_capacity / self.price


@dataclass(frozen=True)
class VmInstanceSpec:
    vm_type: VmType
    ordinal: int  # 1-based rental order within the run


@dataclass(frozen=True)
class Core:
    tasks: tuple[TaskKey, ...]  # append order
    busy_until: float  # seconds; sum of execution times
    work: float  # GHz-seconds; sum of assigned requirements


PM = "pm"
VM = "vm"


@dataclass(frozen=True)
class Container:
    id: int
    kind: str  # PM or VM
    spec: Union[PmSpec, VmInstanceSpec]
    cores: tuple[Core, ...]

    @property
    def core_capacity(self) -> float:
        if self.kind == PM:
            return self.spec.core_capacity
        return self.spec.vm_type.core_capacity

    @property
    def used(self) -> bool:
        return any(c.tasks for c in self.cores)

    @property
    def max_busy(self) -> float:
        return max((c.busy_until for c in self.cores), default=0.0)


@dataclass(frozen=True)
class Assignment:
    task: TaskKey
    container_id: int
    core_index: int
    start: float
    finish: float


@dataclass(frozen=True)
class Schedule:
    assignments: tuple[Assignment, ...]
    containers: tuple[Container, ...]
    rented_vm_count: int

    def container_by_id(self) -> dict[int, Container]:
        return {c.id: c for c in self.containers}


@dataclass(frozen=True)
class ObjectiveParams:
    epsilon: float
    pm_count: int


def execution_time(task: Task, capacity: float) -> float:
    """Seconds to run `task` on a core of the given GHz capacity."""
    if capacity <= 0:
        raise ZeroCapacity(f"core capacity must be positive, got {capacity}")
    return task.requirement / capacity


def build_workload(jobs: list[Job]) -> Workload:
    """Validate and order jobs by deadline (ties by id), syncing task fields.

    Task deadlines and job_ids are rewritten to match the owning job, so
    callers may hand in loosely-built Job records.
    """
    if not jobs:
        raise EmptyWorkload("no jobs given")
    for job in jobs:
        if job.deadline <= 0:
            raise InvalidJob(job.id, f"non-positive deadline {job.deadline}")
        if not job.tasks:
            raise InvalidJob(job.id, "no tasks")
        for t in job.tasks:
            if t.requirement <= 0:
                raise InvalidJob(job.id, f"non-positive requirement {t.requirement}")
    ordered = sorted(jobs, key=lambda j: (j.deadline, j.id))
    synced = []
    for job in ordered:
        tasks = tuple(
            replace(t, job_id=job.id, deadline=job.deadline) for t in job.tasks
        )
        synced.append(replace(job, tasks=tasks))
    total = sum(len(j.tasks) for j in synced)
    return Workload(jobs=tuple(synced), total_tasks=total)


def make_job(job_id: int, deadline: float, requirements: list[float]) -> Job:
    """Convenience constructor: one task per requirement, 1-based indices."""
    tasks = tuple(
        Task(job_id=job_id, task_index=i + 1, requirement=r, deadline=deadline)
        for i, r in enumerate(requirements)
    )
    return Job(id=job_id, deadline=deadline, tasks=tasks)
