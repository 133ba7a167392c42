"""Sweep plans: which parameter tuples a verifier visits."""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import prod
from typing import Sequence

EXHAUSTIVE_LIMIT = 10_000


@dataclass(frozen=True)
class SweepPlan:
    """How to enumerate a parameter space.

    ``exhaustive`` visits every tuple.  ``sampled`` draws ``count`` distinct
    tuples with a generator seeded from ``seed`` and the sweep's key (falling
    back to every tuple when the space is no larger than ``count``).  ``auto``
    is exhaustive up to ``limit`` tuples and sampled beyond.
    """

    mode: str = "auto"
    count: int = 500
    seed: int = 42
    limit: int = EXHAUSTIVE_LIMIT

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled", "auto"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.count < 1:
            raise ValueError("sample count must be positive")

    @classmethod
    def exhaustive(cls) -> SweepPlan:
        return cls("exhaustive")

    @classmethod
    def sampled(cls, count: int, seed: int = 42) -> SweepPlan:
        return cls("sampled", count, seed)

    @classmethod
    def parse(cls, text: str) -> SweepPlan:
        """Parse ``exhaustive``, ``sample:COUNT:SEED`` or ``auto[:LIMIT:COUNT:SEED]``."""
        parts = text.strip().split(":")
        head = parts[0].lower()
        try:
            if head == "exhaustive" and len(parts) == 1:
                return cls.exhaustive()
            if head in ("sample", "sampled") and len(parts) in (2, 3):
                return cls.sampled(int(parts[1]), int(parts[2]) if len(parts) == 3 else 42)
            if head == "auto" and len(parts) in (1, 4):
                if len(parts) == 1:
                    return cls()
                return cls("auto", int(parts[2]), int(parts[3]), int(parts[1]))
        except ValueError:
            pass
        raise ValueError(f"bad plan {text!r}; expected exhaustive, sample:COUNT:SEED or auto")

    def __str__(self) -> str:
        if self.mode == "exhaustive":
            return "exhaustive"
        if self.mode == "sampled":
            return f"sample:{self.count}:{self.seed}"
        return f"auto:{self.limit}:{self.count}:{self.seed}"

    def is_exhaustive_for(self, total: int) -> bool:
        if self.mode == "exhaustive":
            return True
        if self.mode == "sampled":
            return total <= self.count
        return total <= self.limit

    def rng(self, key: str) -> random.Random:
        return random.Random(f"{self.seed}:{key}")

    def tuples(self, space: Sequence[Sequence[int]], key: str) -> list[tuple[int, ...]]:
        """Tuples from the product of ``space``, in increasing index order."""
        space = [list(s) for s in space]
        total = prod(len(s) for s in space)
        if total == 0:
            return []
        if self.is_exhaustive_for(total):
            picks = range(total)
        else:
            picks = sorted(self.rng(key).sample(range(total), self.count))
        out = []
        for idx in picks:
            t = []
            for s in reversed(space):
                idx, r = divmod(idx, len(s))
                t.append(s[r])
            out.append(tuple(reversed(t)))
        return out


DEFAULT_PLAN = SweepPlan()
