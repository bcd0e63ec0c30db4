"""Exception hierarchy shared across the scheduler, metrics, and ingest code."""

from __future__ import annotations


class SchedulingError(Exception):
    """Base class for every error raised by this package."""


class EmptyWorkload(SchedulingError):
    pass


class InvalidJob(SchedulingError):
    def __init__(self, job_id, reason: str):
        self.job_id = job_id
        self.reason = reason
        super().__init__(f"invalid job {job_id}: {reason}")


class ZeroCapacity(SchedulingError):
    pass


class NotAVm(SchedulingError):
    pass


class NotAPm(SchedulingError):
    pass


class EpsilonOutOfRange(SchedulingError):
    pass


class EmptyCatalog(SchedulingError):
    pass


class NoPmAvailable(SchedulingError):
    pass


class DanglingAssignment(SchedulingError):
    def __init__(self, task):
        self.task = task
        super().__init__(f"assignment references unknown task {task}")


class UnschedulableTask(SchedulingError):
    """Some task cannot meet its deadline on any core it could ever be offered."""

    def __init__(self, offenders, message: str | None = None):
        self.offenders = list(offenders)
        super().__init__(
            message or f"unschedulable tasks: {self.offenders[:10]}"
            + ("..." if len(self.offenders) > 10 else "")
        )


class NoFeasibleVmType(UnschedulableTask):
    """No catalog type can run every remaining task alone within its deadline."""


class VmCapExceeded(SchedulingError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"VM rental cap of {cap} reached with tasks still unassigned")


class InstanceTooLarge(SchedulingError):
    pass


class Infeasible(SchedulingError):
    pass


class MalformedLine(SchedulingError):
    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"malformed trace line {line_number}: {line!r}")


class NotEnoughTasks(SchedulingError):
    def __init__(self, wanted: int, available: int):
        self.wanted = wanted
        self.available = available
        super().__init__(f"asked for {wanted} tasks but workload has {available}")
