import random

import pytest

from burstsched import (
    PmSpec,
    VmType,
    build_workload,
    check_deadlines,
    make_job,
    schedule_ffd,
)
from burstsched.errors import UnschedulableTask, VmCapExceeded
from burstsched.serial import schedule_to_doc

from helpers import random_instance

CAT = [VmType("x", 2, 2.7, 0.105, 3600.0)]


def test_ffd_hand_traced_example():
    w = build_workload([make_job(1, 2.0, [4.0]), make_job(2, 2.0, [2.0])])
    s = schedule_ffd(w, [PmSpec(1, 1, 2.0)], CAT)
    by_task = {a.task: a for a in s.assignments}
    assert by_task[(1, 1)].container_id == 1  # longest first, fits the PM exactly
    assert by_task[(2, 1)].container_id == 2  # overflow to a rented VM
    assert s.rented_vm_count == 1


def test_ffd_small_task_ample_pm():
    w = build_workload([make_job(1, 100.0, [2.0])])
    s = schedule_ffd(w, [PmSpec(1, 2, 2.0)], CAT)
    assert s.rented_vm_count == 0
    assert s.assignments[0].core_index == 0


def test_ffd_equal_lengths_placed_in_key_order():
    w = build_workload([make_job(1, 100.0, [2.0, 2.0]), make_job(2, 100.0, [2.0])])
    s = schedule_ffd(w, [PmSpec(1, 1, 2.0)], CAT)
    assert [a.task for a in s.assignments] == [(1, 1), (1, 2), (2, 1)]


def test_ffd_unschedulable_and_cap():
    with pytest.raises(UnschedulableTask):
        schedule_ffd(build_workload([make_job(1, 1.0, [100.0])]), [], CAT)
    jobs = [make_job(i, 10.0, [26.0]) for i in range(1, 8)]
    with pytest.raises(VmCapExceeded):
        schedule_ffd(build_workload(jobs), [], CAT, vm_cap=1)


def test_ffd_feasible_on_random_instances():
    rng = random.Random(31)
    for _ in range(20):
        w, pms, catalog, _ = random_instance(rng, rng.randint(10, 80))
        s = schedule_ffd(w, pms, catalog)
        rep = check_deadlines(s, w)
        assert rep.feasible, rep.violations[:3]
        assert len(s.assignments) == w.total_tasks


def test_ffd_determinism():
    rng = random.Random(6)
    w, pms, catalog, _ = random_instance(rng, 60)
    assert schedule_to_doc(schedule_ffd(w, pms, catalog)) == schedule_to_doc(
        schedule_ffd(w, pms, catalog)
    )


def test_ffd_first_fit_replay():
    # Re-run the placement order and verify every earlier core in scan order
    # failed the deadline check at the moment each task was placed.
    rng = random.Random(17)
    w, pms, catalog, _ = random_instance(rng, 60)
    s = schedule_ffd(w, pms, catalog)
    tasks = w.task_map()
    by_id = s.container_by_id()

    # Scan order: PMs by descending capacity product then id, VMs by id.
    pm_order = sorted(
        (c for c in s.containers if c.kind == "pm"),
        key=lambda c: (-c.spec.capacity_product, c.id),
    )
    vm_order = sorted((c for c in s.containers if c.kind == "vm"), key=lambda c: c.id)
    scan = [
        (c.id, l, c.core_capacity)
        for c in pm_order + vm_order
        for l in range(len(c.cores))
    ]
    busy = {(cid, l): 0.0 for cid, l, _ in scan}

    placement_order = sorted(
        s.assignments,
        key=lambda a: (-tasks[a.task].requirement, a.task),
    )
    opened_vms = set()
    for a in placement_order:
        t = tasks[a.task]
        target_is_new_vm = (
            by_id[a.container_id].kind == "vm" and a.container_id not in opened_vms
        )
        for cid, l, cap in scan:
            if by_id[cid].kind == "vm" and cid not in opened_vms and cid != a.container_id:
                continue  # not rented yet at this point of the replay
            if (cid, l) == (a.container_id, a.core_index):
                break
            if target_is_new_vm and cid == a.container_id:
                break  # t opened this VM; earlier cores of it do not exist yet
            assert busy[(cid, l)] + t.requirement / cap > t.deadline
        busy[(a.container_id, a.core_index)] += t.requirement / by_id[a.container_id].core_capacity
        if by_id[a.container_id].kind == "vm":
            opened_vms.add(a.container_id)
