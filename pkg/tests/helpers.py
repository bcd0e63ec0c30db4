"""Shared random-instance generators for the test and acceptance suites."""

from __future__ import annotations

import random

from burstsched import PmSpec, VmType, Workload, build_workload, make_job

# A type with capacity >= 2.0 GHz keeps every alpha-derived deadline feasible
# alone on a fresh core (req/cap <= alpha*req/2 for alpha >= 1).
BASE_TYPE = VmType("c3.large", 2, 2.7, 0.105, 3600.0)
EXTRA_TYPES = [
    VmType("m4.xlarge", 4, 2.4, 0.20, 3600.0),
    VmType("z1.fast", 1, 3.2, 0.09, 3600.0),
]


def random_instance(rng: random.Random, n_tasks: int | None = None):
    """Feasible instance: 10-500 tasks, 1-20 PMs, 1-3 VM types, alpha 1-4."""
    if n_tasks is None:
        n_tasks = rng.randint(10, 500)
    alpha = rng.randint(1, 4)
    jobs = []
    jid = 1
    total = 0
    while total < n_tasks:
        size = min(rng.randint(1, 8), n_tasks - total)
        runtime = 20 * (3000 / 20) ** rng.random()  # log-uniform seconds
        jobs.append(make_job(jid, alpha * runtime / 2.0, [runtime] * size))
        jid += 1
        total += size
    pms = [
        PmSpec(k + 1, rng.choice([2, 4, 8]), rng.choice([1.6, 2.0, 2.4, 3.0, 3.2]))
        for k in range(rng.randint(1, 20))
    ]
    catalog = [BASE_TYPE] + rng.sample(EXTRA_TYPES, rng.randint(0, 2))
    return build_workload(jobs), pms, catalog, alpha


def medium_instance(rng: random.Random, n_tasks: int = 200):
    """200-task instance with a tightness split over a two-type catalog.

    A slice of jobs gets deadlines only the fast 1-core type can meet alone,
    the rest are loose; the local fleet is small so both schedulers must rent.
    """
    catalog = [
        VmType("big", 8, 2.0, 0.30, 3600.0),
        VmType("small", 1, 3.2, 0.08, 3600.0),
    ]
    jobs = []
    jid = 1
    total = 0
    while total < n_tasks:
        size = min(rng.randint(1, 6), n_tasks - total)
        base = 50 * (2000 / 50) ** rng.random()
        reqs = [max(base * rng.uniform(0.3, 1.0), 1.0) for _ in range(size)]
        if rng.random() < 0.4:
            beta = rng.uniform(0.33, 0.48)  # feasible only at >= 3.2 GHz
        else:
            beta = rng.uniform(0.8, 2.0)
        jobs.append(make_job(jid, beta * max(reqs), reqs))
        jid += 1
        total += size
    pms = [
        PmSpec(k + 1, rng.choice([2, 4]), rng.choice([2.4, 3.0]))
        for k in range(rng.randint(1, 2))
    ]
    return build_workload(jobs), pms, catalog


def tiny_instance(rng: random.Random):
    """Oracle-sized instance: <= 6 tasks, <= 2 single-core PMs, 1-core VM type.

    Returns (workload, pms, catalog, max_vms) with total enumerable cores <= 6.
    Deadlines are drawn so that some instances are infeasible.
    """
    n_tasks = rng.randint(1, 6)
    jobs = []
    for jid in range(1, n_tasks + 1):
        req = rng.uniform(1.0, 10.0)
        beta = rng.uniform(0.3, 2.5)  # below 1/2.7 per GHz it may be infeasible
        jobs.append(make_job(jid, beta * req, [req]))
    n_pms = rng.randint(0, 2)
    pms = [PmSpec(k + 1, 1, rng.choice([2.0, 3.0])) for k in range(n_pms)]
    catalog = [VmType("v1", 1, rng.choice([2.7, 3.2]), 0.10, 3600.0)]
    max_vms = 6 - n_pms
    return build_workload(jobs), pms, catalog, max_vms
