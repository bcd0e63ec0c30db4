"""Run configuration and experiment plans loaded from JSON files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .defaults import default_catalog, default_fleet
from .model import PmSpec, VmType
from .serial import catalog_from_doc, fleet_from_doc
from .swf import FleetConfig


@dataclass(frozen=True)
class RunConfig:
    fleet: FleetConfig
    catalog: tuple[VmType, ...]
    alpha: int = 1
    vm_cap: Optional[int] = None
    epsilon: Optional[float] = None  # None -> derived from catalog and fleet size


def default_run_config() -> RunConfig:
    return RunConfig(
        fleet=FleetConfig(pms=tuple(default_fleet()), scale_factor=1),
        catalog=tuple(default_catalog()),
    )


def load_run_config(path: Union[str, Path]) -> RunConfig:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    pms = (
        tuple(fleet_from_doc(doc["fleet"]))
        if "fleet" in doc
        else tuple(default_fleet())
    )
    catalog = (
        tuple(catalog_from_doc(doc["catalog"]))
        if "catalog" in doc
        else tuple(default_catalog())
    )
    return RunConfig(
        fleet=FleetConfig(pms=pms, scale_factor=doc.get("scale_factor", 1)),
        catalog=catalog,
        alpha=doc.get("alpha", 1),
        vm_cap=doc.get("vm_cap"),
        epsilon=doc.get("epsilon"),
    )


@dataclass(frozen=True)
class ExperimentPlan:
    algorithms: tuple[str, ...]
    alphas: tuple[int, ...]
    pm_scales: tuple[int, ...] = (1,)
    task_counts: Optional[tuple[int, ...]] = None  # None -> full workload
    repetitions: int = 3

    def validate(self) -> None:
        if not self.algorithms:
            raise ValueError("plan needs at least one algorithm")
        bad = [a for a in self.algorithms if a not in ("ha", "ffd")]
        if bad:
            raise ValueError(f"unknown algorithms in plan: {bad}")
        if not self.alphas:
            raise ValueError("plan needs at least one alpha")
        if not self.pm_scales:
            raise ValueError("plan needs at least one pm_scale")
        if self.task_counts is not None and not self.task_counts:
            raise ValueError("task_counts, when given, must be non-empty")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


def load_plan(path: Union[str, Path]) -> ExperimentPlan:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    plan = ExperimentPlan(
        algorithms=tuple(doc["algorithms"]),
        alphas=tuple(doc["alphas"]),
        pm_scales=tuple(doc.get("pm_scales", [1])),
        task_counts=tuple(doc["task_counts"]) if doc.get("task_counts") else None,
        repetitions=doc.get("repetitions", 3),
    )
    plan.validate()
    return plan
