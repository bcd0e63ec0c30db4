"""Deadline-constrained bag-of-tasks scheduling on hybrid local/public fleets."""

from .defaults import default_catalog, default_fleet
from .exact import ExactSolution, solve_exact
from .ffd import schedule_ffd
from .ha import schedule_ha, select_assignment, select_pm, select_vm_type
from .metrics import (
    MetricsReport,
    build_report,
    check_deadlines,
    default_epsilon,
    makespan,
    objective_value,
    overall_utilization,
    pm_utilization,
    rent_cost,
)
from .model import (
    Assignment,
    Container,
    Core,
    Job,
    ObjectiveParams,
    PmSpec,
    Schedule,
    Task,
    VmInstanceSpec,
    VmType,
    Workload,
    build_workload,
    execution_time,
    make_job,
)
from .swf import (
    FleetConfig,
    RawTraceJob,
    parse_swf,
    parse_swf_path,
    scale_fleet,
    to_workload,
    truncate_tasks,
)

__all__ = [
    "Assignment",
    "Container",
    "Core",
    "ExactSolution",
    "FleetConfig",
    "Job",
    "MetricsReport",
    "ObjectiveParams",
    "PmSpec",
    "RawTraceJob",
    "Schedule",
    "Task",
    "VmInstanceSpec",
    "VmType",
    "Workload",
    "build_report",
    "build_workload",
    "check_deadlines",
    "default_catalog",
    "default_epsilon",
    "default_fleet",
    "execution_time",
    "make_job",
    "makespan",
    "objective_value",
    "overall_utilization",
    "parse_swf",
    "parse_swf_path",
    "pm_utilization",
    "rent_cost",
    "scale_fleet",
    "schedule_ffd",
    "schedule_ha",
    "select_assignment",
    "select_pm",
    "select_vm_type",
    "solve_exact",
    "to_workload",
    "truncate_tasks",
]
