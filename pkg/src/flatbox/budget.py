"""Node and wall-clock limits for exhaustive searches."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded


@dataclass
class Budget:
    """Counts search nodes and raises :class:`BudgetExceeded` past a limit.

    ``None`` disables a limit. The clock is only sampled every 1024 ticks.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None
    nodes: int = 0
    _start: float = field(default_factory=time.monotonic, repr=False)

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exhausted", self.nodes)
        if self.max_seconds is not None and (self.nodes & 1023) == 0:
            if time.monotonic() - self._start > self.max_seconds:
                raise BudgetExceeded(
                    f"time budget of {self.max_seconds}s exhausted", self.nodes
                )

    def restart(self) -> None:
        self.nodes = 0
        self._start = time.monotonic()


def unlimited() -> Budget:
    return Budget()
