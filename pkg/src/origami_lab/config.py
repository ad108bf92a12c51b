"""Experiment configurations shared by the CLI and the scripts in ``scripts/``."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ScanConfig:
    family: str = "staircase"  # staircase | schreier | selberg
    genus: int = 2
    k: int = 2
    levels: tuple[int, ...] = (4, 8, 16, 32, 64)
    control: bool = True
    threads: int = 1


@dataclass(frozen=True)
class Pi1Config:
    genus: int = 2
    k: int = 2
    levels: tuple[int, ...] = (4, 8, 16)
    scales: tuple[int, ...] = (1, 2)
    budget: int = 10_000_000
    control_levels: tuple[int, ...] = (8, 16)


@dataclass(frozen=True)
class FiberConfig:
    genus: int = 2
    k: int = 2
    levels: tuple[int, ...] = (4, 8, 16, 32, 64)
    # tau-orbit of (square 0, 1/2, 0): both points lie over the same torus point
    points: tuple[str, ...] = field(default=("0:1/2:0/1", "1:1/2:0/1"))


@dataclass(frozen=True)
class Z2Config:
    count: int = 10_000
    k: int = 2
    seed: int = 7
    max_size: int = 64
    bound: int = 1000
    threads: int = 1
