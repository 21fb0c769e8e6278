"""Bundled instances: finite groups G with a formula kappa defining H."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .groups import GroupTable, cyclic, dihedral, direct_product, load_group, quaternion8, symmetric

SQUARES = "exists y. y*y = x"


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    group: str                      # builder expression or path to a group file
    kappa: str
    params: dict = field(default_factory=dict)
    mode: str = "auto"


CORPUS = tuple(sorted((
    InstanceSpec("S3/A3", "dihedral:3", SQUARES),
    InstanceSpec("C6/C3", "cyclic:6", SQUARES),
    InstanceSpec("C4/C2", "cyclic:4", SQUARES),
    InstanceSpec("D4/C4", "dihedral:4", "x*@r = @r*x", {"r": 1}),
    InstanceSpec("Q8/Z(Q8)", "quaternion8", "forall y. x*y = y*x"),
    InstanceSpec("S4/A4", "symmetric:4", SQUARES),
    InstanceSpec("S4/V4", "symmetric:4", "x*x = 1 & (exists y. y*y = x)"),
    InstanceSpec("(C2xC2xC2)/(C2xC2)", "product:cyclic:2,cyclic:2,cyclic:2",
                 "x = 1 | x = @a | x = @b | x = @a*@b", {"a": 2, "b": 4}),
), key=lambda s: s.name))

_BUILDERS = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}


def build_group(expr: str) -> GroupTable:
    """Builder expression ("symmetric:4", "quaternion8", "product:cyclic:2,cyclic:2") or file path."""
    expr = expr.strip()
    if expr == "quaternion8":
        return quaternion8()
    if expr.startswith("product:"):
        factors = [f for f in expr[len("product:"):].split(",") if f]
        if len(factors) < 2:
            raise ValueError(f"product needs at least two factors: {expr!r}")
        return direct_product(*(build_group(f) for f in factors))
    m = re.fullmatch(r"(cyclic|dihedral|symmetric):(\d+)", expr)
    if m:
        return _BUILDERS[m.group(1)](int(m.group(2)))
    if Path(expr).is_file():
        return load_group(expr)
    raise ValueError(f"unknown group expression or missing file: {expr!r}")


def corpus_by_name() -> dict[str, InstanceSpec]:
    return {s.name: s for s in CORPUS}
