"""Canonical JSON-style documents for workloads, fleets, catalogs, schedules.

Field names match the dataclass fields one-to-one so documents round-trip
to identical objects.
"""

from __future__ import annotations

from typing import Any

from .model import (
    PM,
    VM,
    Assignment,
    Container,
    Core,
    Job,
    PmSpec,
    Schedule,
    Task,
    VmInstanceSpec,
    VmType,
    Workload,
)

Doc = dict[str, Any]


def task_to_doc(t: Task) -> Doc:
    return {
        "job_id": t.job_id,
        "task_index": t.task_index,
        "requirement": t.requirement,
        "deadline": t.deadline,
    }


def task_from_doc(d: Doc) -> Task:
    return Task(
        job_id=d["job_id"],
        task_index=d["task_index"],
        requirement=d["requirement"],
        deadline=d["deadline"],
    )


def workload_to_doc(w: Workload) -> Doc:
    return {
        "jobs": [
            {
                "id": j.id,
                "deadline": j.deadline,
                "tasks": [task_to_doc(t) for t in j.tasks],
            }
            for j in w.jobs
        ],
        "total_tasks": w.total_tasks,
    }


def workload_from_doc(d: Doc) -> Workload:
    jobs = tuple(
        Job(
            id=jd["id"],
            deadline=jd["deadline"],
            tasks=tuple(task_from_doc(td) for td in jd["tasks"]),
        )
        for jd in d["jobs"]
    )
    return Workload(jobs=jobs, total_tasks=d["total_tasks"])


def pm_to_doc(p: PmSpec) -> Doc:
    return {"id": p.id, "core_count": p.core_count, "core_capacity": p.core_capacity}


def pm_from_doc(d: Doc) -> PmSpec:
    return PmSpec(id=d["id"], core_count=d["core_count"], core_capacity=d["core_capacity"])


def vm_type_to_doc(v: VmType) -> Doc:
    return {
        "type_id": v.type_id,
        "core_count": v.core_count,
        "core_capacity": v.core_capacity,
        "price": v.price,
        "billing_period": v.billing_period,
    }


def vm_type_from_doc(d: Doc) -> VmType:
    return VmType(
        type_id=d["type_id"],
        core_count=d["core_count"],
        core_capacity=d["core_capacity"],
        price=d["price"],
        billing_period=d.get("billing_period", 3600.0),
    )


def catalog_to_doc(catalog: list[VmType]) -> list[Doc]:
    return [vm_type_to_doc(v) for v in catalog]


def catalog_from_doc(docs: list[Doc]) -> list[VmType]:
    return [vm_type_from_doc(d) for d in docs]


def fleet_to_doc(pms: list[PmSpec]) -> list[Doc]:
    return [pm_to_doc(p) for p in pms]


def fleet_from_doc(docs: list[Doc]) -> list[PmSpec]:
    return [pm_from_doc(d) for d in docs]


def _core_to_doc(c: Core) -> Doc:
    return {
        "tasks": [list(k) for k in c.tasks],
        "busy_until": c.busy_until,
        "work": c.work,
    }


def _core_from_doc(d: Doc) -> Core:
    return Core(
        tasks=tuple((k[0], k[1]) for k in d["tasks"]),
        busy_until=d["busy_until"],
        work=d["work"],
    )


def container_to_doc(c: Container) -> Doc:
    if c.kind == PM:
        spec: Doc = pm_to_doc(c.spec)
    else:
        spec = {"vm_type": vm_type_to_doc(c.spec.vm_type), "ordinal": c.spec.ordinal}
    return {
        "id": c.id,
        "kind": c.kind,
        "spec": spec,
        "cores": [_core_to_doc(core) for core in c.cores],
    }


def container_from_doc(d: Doc) -> Container:
    if d["kind"] == PM:
        spec = pm_from_doc(d["spec"])
    else:
        spec = VmInstanceSpec(
            vm_type=vm_type_from_doc(d["spec"]["vm_type"]),
            ordinal=d["spec"]["ordinal"],
        )
    return Container(
        id=d["id"],
        kind=d["kind"],
        spec=spec,
        cores=tuple(_core_from_doc(cd) for cd in d["cores"]),
    )


def assignment_to_doc(a: Assignment) -> Doc:
    return {
        "task": list(a.task),
        "container_id": a.container_id,
        "core_index": a.core_index,
        "start": a.start,
        "finish": a.finish,
    }


def assignment_from_doc(d: Doc) -> Assignment:
    return Assignment(
        task=(d["task"][0], d["task"][1]),
        container_id=d["container_id"],
        core_index=d["core_index"],
        start=d["start"],
        finish=d["finish"],
    )


def schedule_to_doc(s: Schedule) -> Doc:
    return {
        "assignments": [assignment_to_doc(a) for a in s.assignments],
        "containers": [container_to_doc(c) for c in s.containers],
        "rented_vm_count": s.rented_vm_count,
    }


def schedule_from_doc(d: Doc) -> Schedule:
    return Schedule(
        assignments=tuple(assignment_from_doc(ad) for ad in d["assignments"]),
        containers=tuple(container_from_doc(cd) for cd in d["containers"]),
        rented_vm_count=d["rented_vm_count"],
    )
