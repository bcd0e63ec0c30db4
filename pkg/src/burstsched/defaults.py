"""Bundled default fleet and VM catalog.

The 15-PM heterogeneous fleet is a stand-in local cluster (core counts 2-8,
capacities 1.6-3.2 GHz); the catalog carries a single compute-optimized
type: 2 cores at 2.7 GHz, 0.105 per hour.  Both are fully overridable via
a JSON config file.
"""

from __future__ import annotations

from .model import PmSpec, VmType


def default_fleet() -> list[PmSpec]:
    specs = [
        (8, 3.2),
        (8, 3.2),
        (8, 3.2),
        (8, 2.4),
        (8, 2.4),
        (4, 3.0),
        (4, 3.0),
        (4, 2.0),
        (4, 2.0),
        (4, 2.0),
        (2, 2.6),
        (2, 2.6),
        (2, 1.6),
        (2, 1.6),
        (2, 1.6),
    ]
    return [
        PmSpec(id=i + 1, core_count=n, core_capacity=cap)
        for i, (n, cap) in enumerate(specs)
    ]


def default_catalog() -> list[VmType]:
    return [
        VmType(
            type_id="c3.large",
            core_count=2,
            core_capacity=2.7,
            price=0.105,
            billing_period=3600.0,
        )
    ]
