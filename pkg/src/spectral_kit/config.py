"""Dataclass configurations for the experiment scripts.

Each config can be filled from command-line flags derived from its fields,
so a script only declares the dataclass.
"""

from __future__ import annotations

import argparse
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class GridConfig:
    """Exhaustive bound check over a range of vertex counts."""

    n_min: int = 4
    n_max: int = 7
    jobs: int = 1
    extended: bool = False
    claims: bool = True
    out_dir: str = "results"


@dataclass(frozen=True)
class SweepConfig:
    """Closed-form and monotonicity sweeps over the extremal families."""

    max_size: int = 14  # n1 + n2 cap for the dense comparisons
    max_n: int = 30  # cap for the root-only comparisons
    out_dir: str = "results"


_TYPES = {"int": int, "float": float, "str": str}


def from_argv(cls, argv: list[str] | None = None, description: str | None = None):
    """Build ``cls`` from ``--field value`` flags; booleans become on/off switches."""
    ap = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        # field types are strings here because of the __future__ import
        if f.type == "bool":
            ap.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            ap.add_argument(flag, type=_TYPES[f.type], default=f.default)
    ns = ap.parse_args(argv)
    return cls(**vars(ns))
