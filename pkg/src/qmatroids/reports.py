from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class AxiomReport:
    """Verdict of an axiom check.

    On failure ``axiom`` names the violated axiom and ``witness`` maps role
    names (``"X"``, ``"Y"``, ``"A"``, ...) to the offending subspaces.
    """

    ok: bool
    axiom: str | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, detail: str = "") -> "AxiomReport":
        return cls(True, detail=detail)

    def describe(self) -> str:
        if self.ok:
            return "pass" + (f" ({self.detail})" if self.detail else "")
        parts = [f"fail {self.axiom}"]
        for k, v in self.witness.items():
            parts.append(f"{k}={_render(v)}")
        if self.detail:
            parts.append(f"[{self.detail}]")
        return " ".join(parts)


def _render(v) -> str:
    if hasattr(v, "render"):
        return f"<{v.render()}>"
    return str(v)
