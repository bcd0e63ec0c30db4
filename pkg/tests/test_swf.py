import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burstsched import default_fleet
from burstsched.errors import MalformedLine, NotEnoughTasks
from burstsched.swf import (
    FleetConfig,
    RawTraceJob,
    parse_swf,
    parse_swf_path,
    scale_fleet,
    to_workload,
    truncate_tasks,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def test_parse_skips_headers_and_blanks():
    res = parse_swf(["; Version: 2.2", "", "1 0 0 100 4", "; trailer"])
    assert res.jobs == (RawTraceJob(job_number=1, runtime=100.0, processors=4),)
    assert res.data_lines == 1
    assert res.dropped == 0


def test_parse_drops_unusable_records():
    res = parse_swf(["7 3 1 -1 8", "8 3 1 50 0", "9 3 1 50 2"])
    assert [j.job_number for j in res.jobs] == [9]
    assert res.dropped == 2
    assert res.data_lines == 3


def test_parse_rejects_short_lines():
    with pytest.raises(MalformedLine) as exc:
        parse_swf(["; ok", "1 2 3"])
    assert exc.value.line_number == 2


def test_to_workload_deadline_and_requirement():
    raw = [RawTraceJob(job_number=1, runtime=100.0, processors=4)]
    w = to_workload(raw, alpha=1)
    assert w.total_tasks == 4
    t = w.jobs[0].tasks[0]
    assert t.requirement == 100.0  # 100 s at the 1 GHz reference
    assert t.deadline == 50.0  # runtime / 2 on a 2 GHz core, alpha = 1

    w3 = to_workload(raw, alpha=3)
    assert w3.jobs[0].deadline == 150.0

    single = to_workload(raw, alpha=1, split_by_processors=False)
    assert single.total_tasks == 1


def test_to_workload_rejects_bad_alpha():
    with pytest.raises(ValueError):
        to_workload([], alpha=0)


def test_truncate_prefix():
    raw = [
        RawTraceJob(1, 10.0, 3),
        RawTraceJob(2, 40.0, 2),
        RawTraceJob(3, 20.0, 2),
    ]
    w = to_workload(raw, alpha=1)
    cut = truncate_tasks(w, 4)
    assert cut.total_tasks == 4
    # Deadline order is job 1 (d=5), job 3 (d=10), job 2 (d=20); the cut
    # keeps job 1 whole and one task of job 3.
    assert [j.id for j in cut.jobs] == [1, 3]
    assert len(cut.jobs[1].tasks) == 1
    with pytest.raises(NotEnoughTasks):
        truncate_tasks(w, 8)
    with pytest.raises(ValueError):
        truncate_tasks(w, 0)


def test_scale_fleet_replicates_with_fresh_ids():
    base = tuple(default_fleet())
    assert len(base) == 15
    scaled = scale_fleet(FleetConfig(pms=base, scale_factor=10))
    assert len(scaled) == 150
    assert [p.id for p in scaled] == list(range(1, 151))
    # Shape repeats whole-fleet-first.
    assert scaled[15].core_count == base[0].core_count
    assert scaled[15].core_capacity == base[0].core_capacity


def test_excerpts_match_manifest():
    manifest = json.loads((DATA / "excerpt_manifest.json").read_text())
    for name, expected in manifest.items():
        res = parse_swf_path(DATA / name)
        assert res.data_lines == expected["data_lines"], name
        assert res.dropped == expected["dropped"], name
        assert len(res.jobs) == expected["retained"], name


@given(
    runtime=st.floats(min_value=1.0, max_value=1e5),
    procs=st.integers(min_value=1, max_value=16),
    alpha=st.integers(min_value=1, max_value=8),
)
@settings(max_examples=100, deadline=None)
def test_deadline_doubles_with_alpha(runtime, procs, alpha):
    raw = [RawTraceJob(1, runtime, procs)]
    d1 = to_workload(raw, alpha).jobs[0].deadline
    d2 = to_workload(raw, 2 * alpha).jobs[0].deadline
    assert d2 == pytest.approx(2 * d1)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_drop_accounting_balances(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    lines = []
    good = 0
    for i in range(1, rng.randint(2, 40)):
        if rng.random() < 0.25:
            lines.append(f"{i} 0 0 -1 {rng.randint(1, 4)}")
        else:
            lines.append(f"{i} 0 0 {rng.randint(1, 500)} {rng.randint(1, 4)}")
            good += 1
    res = parse_swf(lines)
    assert len(res.jobs) + res.dropped == res.data_lines == len(lines)
    assert len(res.jobs) == good
