from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of a decidable predicate: truthiness plus the first witness on failure."""

    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "true"
        return f"false: {self.reason} (witness {self.witness!r})"


class CapExceeded(RuntimeError):
    """An enumeration budget was exhausted; results are never silently truncated."""

    def __init__(self, what: str, cap: int, needed: int | None = None):
        self.what = what
        self.cap = cap
        self.needed = needed
        msg = f"{what}: cap of {cap} exceeded"
        if needed is not None:
            msg += f" (needs {needed})"
        super().__init__(msg)


class FrameError(ValueError):
    def __init__(self, axiom: str, witness: tuple, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        text = f"{axiom}: witness {witness!r}"
        if detail:
            text += f"; {detail}"
        super().__init__(text)


class TopologyError(ValueError):
    def __init__(self, check: Check):
        self.check = check
        super().__init__(f"not an L-topology: {check.reason} (witness {check.witness!r})")


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""
